#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "exou/errors.hpp"

namespace exou {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// is the unique partition of 0. Immutable after construction.
class Partition {
public:
    Partition() = default;

    /// Parts must be weakly decreasing; zeros are stripped, negatives rejected.
    explicit Partition(std::vector<int> parts);

    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    /// Builds a partition from parts in any order.
    static Partition sorted(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }

    /// Number partitioned, |lambda|.
    int size() const { return size_; }

    int rows() const { return static_cast<int>(parts_.size()); }
    int cols() const { return parts_.empty() ? 0 : parts_[0]; }
    bool empty() const { return parts_.empty(); }

    /// 1-based part access; parts beyond the length read as 0.
    int part(int i) const {
        return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0;
    }

    Partition conjugate() const;
    bool is_self_conjugate() const { return *this == conjugate(); }

    /// b(lambda) = max{i | lambda_i = lambda'_i}: length of the main diagonal.
    int diagonal_length() const;

    /// Single row or single column (dimension-1 representation), incl. empty.
    bool is_trivial() const {
        return rows() <= 1 || cols() <= 1;
    }

    /// [n-r, 1^r] with 0 < r < n-1.
    bool is_hook() const {
        return rows() >= 2 && part(1) >= 2 && part(2) == 1;
    }

    /// Second row longer than one.
    bool is_proper() const { return part(2) > 1; }

    bool contains(const Partition& inner) const;

    /// Cell membership, 1-based coordinates.
    bool has_cell(int row, int col) const {
        return row >= 1 && row <= rows() && col >= 1 && col <= parts_[row - 1];
    }

    std::string to_string() const;

    bool operator==(const Partition& other) const = default;
    auto operator<=>(const Partition& other) const {
        return parts_ <=> other.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

enum class PartitionKind {
    TrivialRow,
    TrivialColumn,
    ShallowHook,
    DeepHook,
    Proper,
};

struct PartitionClass {
    PartitionKind kind;
    bool self_conjugate;
    int rows;
    int cols;
    int diagonal_length;
};

const char* to_string(PartitionKind kind);

/// Parses bracket notation, e.g. "[3,2,2]", "[2,1^3]", "[]". Whitespace is
/// ignored. Rising parts raise NotDecreasing unless sort_parts is set.
Partition parse_partition(const std::string& text, bool sort_parts = false);

Partition conjugate(const Partition& p);
PartitionClass classify(const Partition& p);

/// Component-wise sum; missing parts read as 0.
Partition partwise_sum(const Partition& p, const Partition& q);

/// All partitions of n with at most max_rows rows (no bound when <= 0),
/// in descending lexicographic order.
std::vector<Partition> partitions_of(int n, int max_rows = 0);

/// Ordered family of partitions labelling the qudits of one device.
/// Construction enforces the row bound d on every member.
class PartitionFamily {
public:
    PartitionFamily(std::vector<Partition> members, int d);

    /// d defaults to the largest member row count.
    static PartitionFamily with_default_bound(std::vector<Partition> members);

    const std::vector<Partition>& members() const { return members_; }
    int d() const { return d_; }
    int total_size() const { return total_size_; }
    int count() const { return static_cast<int>(members_.size()); }

    /// Multiset {mu} equals the multiset of conjugates {mu'}.
    bool is_self_conjugate_multiset() const;

    /// Every member equals its own conjugate.
    bool all_members_self_conjugate() const;

    bool any_trivial_member() const;
    bool all_members_hooks() const;

    /// Members sorted ascending by (size, parts); multiset-level identity.
    std::vector<Partition> sorted_members() const;

    bool same_multiset(const PartitionFamily& other) const;

    std::string to_string() const;

private:
    std::vector<Partition> members_;
    int d_ = 0;
    int total_size_ = 0;
};

/// Parses a semicolon-separated family, e.g. "[2,1];[2,1]".
std::vector<Partition> parse_family_members(const std::string& text,
                                            bool sort_parts = false);

}  // namespace exou

template <>
struct std::hash<exou::Partition> {
    size_t operator()(const exou::Partition& p) const {
        size_t h = 1469598103934665603ull;
        for (int x : p.parts()) {
            h ^= static_cast<size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};
