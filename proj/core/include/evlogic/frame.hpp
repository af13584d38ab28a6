#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace evlogic {

/// A frame of discernment: a finite ordered set of distinct hypothesis
/// labels. Immutable after construction; cheap to copy (shared data).
/// At most 64 elements so that subsets fit in one machine word.
class Frame {
public:
    static constexpr int max_size = 64;

    int size() const { return static_cast<int>(data_->labels.size()); }
    const std::string& label(int i) const { return data_->labels.at(static_cast<std::size_t>(i)); }
    const std::vector<std::string>& labels() const { return data_->labels; }

    bool has(const std::string& name) const { return data_->index.count(name) != 0; }
    /// Index of `name`; throws ValidationError if unknown.
    int index_of(const std::string& name) const;

    /// Frames compare equal when they share storage or have identical
    /// label sequences.
    friend bool operator==(const Frame& a, const Frame& b) {
        return a.data_ == b.data_ || a.data_->labels == b.data_->labels;
    }
    friend bool operator!=(const Frame& a, const Frame& b) { return !(a == b); }

private:
    struct Data {
        std::vector<std::string> labels;
        std::map<std::string, int> index;
    };
    std::shared_ptr<const Data> data_;

    explicit Frame(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
    friend Frame make_frame(const std::vector<std::string>& labels);
};

/// Builds a frame from distinct, non-empty labels in input order.
Frame make_frame(const std::vector<std::string>& labels);

/// A subset of a frame, stored as a bit mask over element indices.
class SubsetMask {
public:
    SubsetMask(Frame frame, std::uint64_t bits);

    static SubsetMask empty(const Frame& frame) { return SubsetMask(frame, 0); }
    static SubsetMask full(const Frame& frame);

    const Frame& frame() const { return frame_; }
    std::uint64_t bits() const { return bits_; }
    int count() const;

    bool is_empty() const { return bits_ == 0; }
    bool is_full() const { return *this == full(frame_); }
    bool contains(int i) const { return (bits_ >> i) & 1u; }

    SubsetMask operator&(const SubsetMask& other) const;
    SubsetMask operator|(const SubsetMask& other) const;
    SubsetMask minus(const SubsetMask& other) const;
    SubsetMask complement() const;
    bool is_subset_of(const SubsetMask& other) const;

    /// Lowest set element index; -1 when empty. Used as the deterministic
    /// tie-break wherever "pick any element" appears.
    int lowest_member() const;

    /// Member labels in frame index order.
    std::vector<std::string> member_labels() const;

    friend bool operator==(const SubsetMask& a, const SubsetMask& b) {
        return a.frame_ == b.frame_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const SubsetMask& a, const SubsetMask& b) { return !(a == b); }

private:
    Frame frame_;
    std::uint64_t bits_;
};

/// Subset of `frame` containing exactly `members` (duplicates collapse).
SubsetMask subset(const Frame& frame, const std::vector<std::string>& members);

/// True iff the blocks are pairwise disjoint, jointly cover the frame and
/// none is empty. Throws FrameMismatchError on mixed frames.
bool is_partition(const Frame& frame, const std::vector<SubsetMask>& blocks);

/// A validated partition of a frame.
struct Partition {
    Frame frame;
    std::vector<SubsetMask> blocks;
};

/// Builds a Partition; throws ValidationError when the blocks do not
/// partition the frame.
Partition make_partition(const Frame& frame, std::vector<SubsetMask> blocks);

} // namespace evlogic
