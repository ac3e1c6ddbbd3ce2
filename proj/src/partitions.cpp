#include "qwaring/partitions.hpp"

#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>

#include "qwaring/errors.hpp"

namespace qw {

int Partition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::str() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out << ",";
        out << parts[i];
    }
    out << ")";
    return out.str();
}

static void enumerate_rec(int rem, int k, int max_part, std::vector<int>& cur,
                          std::vector<Partition>& out) {
    if (k == 0) {
        if (rem == 0) out.push_back(Partition{cur});
        return;
    }
    // Largest first keeps the output lexicographically decreasing.
    for (int part = std::min(rem, max_part); part >= 1; --part) {
        if (rem - part < k - 1) continue;  // remaining parts are >= 1 each
        cur.push_back(part);
        enumerate_rec(rem - part, k - 1, part, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> enumerate_partitions(int s, int k) {
    if (k < 1 || k > s)
        throw InvalidArgument("enumerate_partitions: need 1 <= k <= s, got s=" +
                              std::to_string(s) + " k=" + std::to_string(k));
    std::vector<Partition> out;
    std::vector<int> cur;
    enumerate_rec(s, k, s, cur, out);
    return out;
}

Int p_k(int s, int k) {
    if (k < 1 || k > s) return 0;
    if (k == s || k == 1) return 1;
    static std::map<std::pair<int, int>, Int> memo;
    static std::mutex memo_mutex;
    std::lock_guard<std::mutex> lock(memo_mutex);
    // Recurse iteratively over the dependency triangle to keep the lock simple.
    std::vector<std::pair<int, int>> stack{{s, k}};
    while (!stack.empty()) {
        auto [ss, kk] = stack.back();
        if (kk < 1 || kk > ss || kk == ss || kk == 1 || memo.count({ss, kk})) {
            stack.pop_back();
            continue;
        }
        auto get = [&](int a, int b) -> const Int* {
            if (b < 1 || b > a) { static const Int zero(0); return &zero; }
            if (b == a || b == 1) { static const Int one(1); return &one; }
            auto it = memo.find({a, b});
            return it == memo.end() ? nullptr : &it->second;
        };
        const Int* left = get(ss - kk, kk);
        const Int* right = get(ss - 1, kk - 1);
        if (left && right) {
            memo[{ss, kk}] = *left + *right;
            stack.pop_back();
        } else {
            if (!left) stack.emplace_back(ss - kk, kk);
            if (!right) stack.emplace_back(ss - 1, kk - 1);
        }
    }
    auto it = memo.find({s, k});
    return it->second;
}

Int p(int s) {
    Int total = 0;
    for (int k = 1; k <= s; ++k) total += p_k(s, k);
    return total;
}

PartitionTable::PartitionTable(int s) : s(s) {
    for (int k = 1; k <= s; ++k) by_k.push_back(enumerate_partitions(s, k));
}

Int multinomial(int total, std::span<const int> parts) {
    long sum = 0;
    for (int part : parts) {
        if (part < 0) throw InvalidArgument("multinomial: negative part");
        sum += part;
    }
    if (sum != total)
        throw InvalidArgument("multinomial: parts sum to " + std::to_string(sum) +
                              ", expected " + std::to_string(total));
    Int r = factorial(total);
    for (int part : parts) r /= factorial(part);
    return r;
}

PartitionBoundsReport check_partition_bounds(int s) {
    if (s < 1) throw InvalidArgument("check_partition_bounds: s >= 1 required");
    PartitionBoundsReport rep;
    rep.s = s;
    rep.merca_ok = true;
    for (int k = 1; k <= s; ++k) {
        if (p_k(s, k) > binomial(Int(s - 1), k - 1)) {
            rep.merca_ok = false;
            rep.merca_failures.push_back(k);
        }
    }
    // p(s) <= (6/s) e^{pi sqrt(2s/3)}. The bound is rounded DOWN before the
    // comparison, so a pass is sound regardless of floating error.
    long double exponent = std::acos(-1.0L) * std::sqrt(2.0L * s / 3.0L);
    long double bound = 6.0L / s * std::exp(exponent) * (1.0L - 1e-12L);
    long double ps = static_cast<long double>(p(s).convert_to<double>());
    rep.kane_oruc_ok = ps <= bound;
    return rep;
}

}  // namespace qw
