#include "evlogic/frame.hpp"

#include "evlogic/errors.hpp"

#include <bit>

namespace evlogic {

int Frame::index_of(const std::string& name) const {
    auto it = data_->index.find(name);
    if (it == data_->index.end())
        throw ValidationError("unknown element '" + name + "'");
    return it->second;
}

Frame make_frame(const std::vector<std::string>& labels) {
    if (labels.empty())
        throw ValidationError("frame needs at least one element");
    if (labels.size() > static_cast<std::size_t>(Frame::max_size))
        throw ValidationError("frame size " + std::to_string(labels.size()) + " exceeds limit of " +
                              std::to_string(Frame::max_size));
    auto data = std::make_shared<Frame::Data>();
    data->labels = labels;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i].empty())
            throw ValidationError("empty element label");
        auto [it, inserted] = data->index.emplace(labels[i], static_cast<int>(i));
        if (!inserted)
            throw ValidationError("duplicate element label '" + labels[i] + "'");
    }
    return Frame(std::move(data));
}

namespace {

void require_same_frame(const Frame& a, const Frame& b) {
    if (a != b)
        throw FrameMismatchError("operands belong to different frames");
}

} // namespace

SubsetMask::SubsetMask(Frame frame, std::uint64_t bits) : frame_(std::move(frame)), bits_(bits) {
    int n = frame_.size();
    std::uint64_t legal = n == 64 ? ~0ull : (1ull << n) - 1;
    if (bits_ & ~legal)
        throw ValidationError("mask has bits outside the frame");
}

SubsetMask SubsetMask::full(const Frame& frame) {
    int n = frame.size();
    return SubsetMask(frame, n == 64 ? ~0ull : (1ull << n) - 1);
}

int SubsetMask::count() const {
    return std::popcount(bits_);
}

SubsetMask SubsetMask::operator&(const SubsetMask& other) const {
    require_same_frame(frame_, other.frame_);
    return SubsetMask(frame_, bits_ & other.bits_);
}

SubsetMask SubsetMask::operator|(const SubsetMask& other) const {
    require_same_frame(frame_, other.frame_);
    return SubsetMask(frame_, bits_ | other.bits_);
}

SubsetMask SubsetMask::minus(const SubsetMask& other) const {
    require_same_frame(frame_, other.frame_);
    return SubsetMask(frame_, bits_ & ~other.bits_);
}

SubsetMask SubsetMask::complement() const {
    return SubsetMask(frame_, full(frame_).bits() & ~bits_);
}

bool SubsetMask::is_subset_of(const SubsetMask& other) const {
    require_same_frame(frame_, other.frame_);
    return (bits_ & ~other.bits_) == 0;
}

int SubsetMask::lowest_member() const {
    if (bits_ == 0)
        return -1;
    return std::countr_zero(bits_);
}

std::vector<std::string> SubsetMask::member_labels() const {
    std::vector<std::string> out;
    for (int i = 0; i < frame_.size(); ++i)
        if (contains(i))
            out.push_back(frame_.label(i));
    return out;
}

SubsetMask subset(const Frame& frame, const std::vector<std::string>& members) {
    std::uint64_t bits = 0;
    for (const auto& name : members)
        bits |= 1ull << frame.index_of(name);
    return SubsetMask(frame, bits);
}

bool is_partition(const Frame& frame, const std::vector<SubsetMask>& blocks) {
    std::uint64_t seen = 0;
    for (const auto& block : blocks) {
        require_same_frame(frame, block.frame());
        if (block.is_empty())
            return false;
        if (seen & block.bits())
            return false; // overlap
        seen |= block.bits();
    }
    return seen == SubsetMask::full(frame).bits();
}

Partition make_partition(const Frame& frame, std::vector<SubsetMask> blocks) {
    if (!is_partition(frame, blocks))
        throw ValidationError("blocks do not partition the frame");
    return Partition{frame, std::move(blocks)};
}

} // namespace evlogic
