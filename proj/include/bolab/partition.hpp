#pragma once

#include <compare>
#include <string>
#include <vector>

namespace bolab {

// Weakly decreasing positive parts; trailing zeros are never stored.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    int size() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // Distinct part values p_1 > p_2 > ... with their multiplicities.
    struct Runs {
        std::vector<int> values;
        std::vector<int> mults;
    };
    Runs runs() const;

    // Multiplicity d_k of part value k.
    int mult(int k) const;

    std::string str() const;  // "(4,4,1)" / "()"

    auto operator<=>(const Partition&) const = default;

  private:
    std::vector<int> parts_;
};

// All partitions of d in reverse lexicographic order, (d) first, (1^d) last.
std::vector<Partition> partitions_of(int d);

// Partition count p(d).
long partition_count(int d);

}  // namespace bolab
