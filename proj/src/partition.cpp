#include "bolab/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace bolab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Runs Partition::runs() const {
    Runs r;
    for (int p : parts_) {
        if (!r.values.empty() && r.values.back() == p) {
            ++r.mults.back();
        } else {
            r.values.push_back(p);
            r.mults.push_back(1);
        }
    }
    return r;
}

int Partition::mult(int k) const {
    int m = 0;
    for (int p : parts_)
        if (p == k) ++m;
    return m;
}

std::string Partition::str() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

namespace {
void gen(int remaining, int max_part, std::vector<int>& acc,
         std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen(remaining - p, p, acc, out);
        acc.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int d) {
    if (d < 0) throw std::invalid_argument("degree must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen(d, d == 0 ? 1 : d, acc, out);
    return out;
}

long partition_count(int d) {
    // Euler's pentagonal recurrence.
    std::vector<long> p(d + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= d; ++n) {
        long sum = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > n && g2 > n) break;
            long sgn = (k % 2 == 1) ? 1 : -1;
            if (g1 <= n) sum += sgn * p[n - g1];
            if (g2 <= n) sum += sgn * p[n - g2];
        }
        p[n] = sum;
    }
    return p[d];
}

}  // namespace bolab
