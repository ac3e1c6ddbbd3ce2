#ifndef QWARING_PARTITIONS_HPP
#define QWARING_PARTITIONS_HPP

#include <algorithm>
#include <map>
#include <span>
#include <vector>

#include "qwaring/rational.hpp"

namespace qw {

// Weakly decreasing tuple of positive integers.
struct Partition {
    std::vector<int> parts;

    int sum() const;
    int count() const { return static_cast<int>(parts.size()); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

    std::string str() const;
};

// All partitions of s into exactly k parts, lexicographically decreasing.
std::vector<Partition> enumerate_partitions(int s, int k);

// Number of partitions of s into exactly k parts (memoized recurrence
// p_k(s) = p_k(s-k) + p_{k-1}(s-1)).
Int p_k(int s, int k);

// p(s) = sum over k of p_k(s).
Int p(int s);

// Partitions of s grouped by part count, k = 1..s.
struct PartitionTable {
    int s = 0;
    std::vector<std::vector<Partition>> by_k;  // by_k[k-1] holds P_k(s)

    explicit PartitionTable(int s);
};

// Exact multinomial coefficient total! / prod(parts[i]!).
Int multinomial(int total, std::span<const int> parts);
inline Int multinomial(int total, const std::vector<int>& parts) {
    return multinomial(total, std::span<const int>(parts));
}
inline Int multinomial(int total, const Partition& m) { return multinomial(total, m.parts); }

// |Stab(tuple)| under the symmetric group: product of factorials of
// multiplicities of the distinct values.
template <typename T>
Int stabilizer_size(std::span<const T> tuple) {
    // Multiplicity scan with equality only; tuples are short.
    Int r = 1;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        bool seen = false;
        for (std::size_t j = 0; j < i; ++j)
            if (tuple[j] == tuple[i]) { seen = true; break; }
        if (seen) continue;
        long mult = 0;
        for (std::size_t j = i; j < tuple.size(); ++j)
            if (tuple[j] == tuple[i]) ++mult;
        r *= factorial(mult);
    }
    return r;
}
template <typename T>
Int stabilizer_size(const std::vector<T>& tuple) {
    return stabilizer_size(std::span<const T>(tuple));
}

// Verification report for the partition-count inequalities.
struct PartitionBoundsReport {
    int s = 0;
    bool merca_ok = false;     // p_k(s) <= C(s-1, k-1) for every k
    bool kane_oruc_ok = false;  // p(s) <= (6/s) e^{pi sqrt(2s/3)}
    std::vector<int> merca_failures;

    bool ok() const { return merca_ok && kane_oruc_ok; }
};

PartitionBoundsReport check_partition_bounds(int s);

}  // namespace qw

#endif
