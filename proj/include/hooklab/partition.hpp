#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hooklab {

class Partition;

namespace detail {
template <typename F>
void emit_partitions(std::vector<int>& acc, int remaining, int max_part, F& visit);
} // namespace detail

/// An integer partition: a non-increasing sequence of positive parts.
/// The empty partition (of 0) is a valid value.
class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument unless parts are non-increasing and >= 1.
    explicit Partition(std::vector<int> parts);

    /// Parses the serialized form: comma-separated decreasing integers,
    /// e.g. "7,7,5,4,3,2,2"; the literal "-" is the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// |lambda|: the number of cells.
    int size() const noexcept { return size_; }

    Partition conjugate() const;
    bool is_self_conjugate() const;

    /// All |lambda| hook lengths, sorted descending.
    std::vector<int> hook_lengths_desc() const;

    /// Hook length -> multiplicity. Total multiplicity equals size().
    std::map<int, int> hook_multiset() const;

    /// n_t(lambda): the number of cells with hook length exactly t (t >= 1).
    int hook_count(int t) const;

    std::string to_string() const;

    bool operator==(const Partition& other) const noexcept { return parts_ == other.parts_; }
    bool operator!=(const Partition& other) const noexcept { return parts_ != other.parts_; }
    bool operator<(const Partition& other) const noexcept { return parts_ < other.parts_; }

private:
    struct Trusted {};
    Partition(Trusted, std::vector<int> parts);

    std::vector<int> parts_;
    int size_ = 0;

    template <typename F>
    friend void detail::emit_partitions(std::vector<int>&, int, int, F&);
};

enum class ScType { type1, type2 };

/// Durfee-square decomposition of a non-empty self-conjugate partition.
/// `twin` is the partition formed by the columns strictly right of the
/// square (equal, by symmetry, to the rows strictly below it).
struct ScSplit {
    int durfee = 0;
    Partition twin;
    ScType type = ScType::type1;
};

/// Throws std::invalid_argument on empty or non-self-conjugate input.
ScSplit sc_split(const Partition& p);

/// Inverse of sc_split.
Partition sc_reassemble(const ScSplit& split);

namespace detail {

template <typename F>
void emit_partitions(std::vector<int>& acc, int remaining, int max_part, F& visit) {
    if (remaining == 0) {
        visit(Partition(Partition::Trusted{}, acc));
        return;
    }
    int first = max_part < remaining ? max_part : remaining;
    for (; first >= 1; --first) {
        acc.push_back(first);
        emit_partitions(acc, remaining - first, first, visit);
        acc.pop_back();
    }
}

} // namespace detail

/// Visits every partition of n exactly once, in reverse-lexicographic order
/// on part sequences. n = 0 yields the empty partition.
template <typename F>
void for_each_partition(int n, F&& visit) {
    if (n < 0) throw std::invalid_argument("for_each_partition: n must be >= 0");
    std::vector<int> acc;
    detail::emit_partitions(acc, n, n, visit);
}

/// Visits every self-conjugate partition of n, in the same order.
template <typename F>
void for_each_self_conjugate(int n, F&& visit) {
    for_each_partition(n, [&](const Partition& p) {
        if (p.is_self_conjugate()) visit(p);
    });
}

std::vector<Partition> all_partitions(int n);
std::vector<Partition> self_conjugate_partitions(int n);

/// q*(n): partitions of n into distinct odd parts. Computed by dynamic
/// programming, independent of the enumeration path. Equals sc(n).
mpz_class count_distinct_odd(int n);

/// sc(n), counted by filtering the full enumeration of partitions of n.
mpz_class count_self_conjugate(int n);

/// a_t*(n) by direct enumeration: the total number of hooks of length t
/// over all self-conjugate partitions of n.
mpz_class a_star_oracle(int t, int n);

} // namespace hooklab
