// Integer partitions: the shape data every module type and group type hangs off.
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace plie {

// A partition lambda_1 >= lambda_2 >= ... >= lambda_t >= 1 of n = sum lambda_i.
class Partition {
public:
    explicit Partition(std::vector<std::int64_t> parts);

    std::int64_t n() const { return n_; }
    // Number of parts, written t throughout the library.
    std::int64_t size() const { return static_cast<std::int64_t>(parts_.size()); }
    const std::vector<std::int64_t>& parts() const { return parts_; }
    std::int64_t part(std::int64_t i) const { return parts_[static_cast<std::size_t>(i)]; }

    // Multiplicities d_1..d_r of the distinct part values in decreasing value order.
    const std::vector<std::int64_t>& multiplicities() const { return mult_; }
    std::int64_t distinct_count() const { return static_cast<std::int64_t>(mult_.size()); }

    // Conjugate partition: dual_i = #{ j : lambda_j >= i }.
    Partition dual() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    std::strong_ordering operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

    std::string to_string() const;                  // "(2,1)"
    static Partition parse(const std::string& s);   // "2,1"

private:
    std::vector<std::int64_t> parts_;
    std::vector<std::int64_t> mult_;
    std::int64_t n_ = 0;
};

// All partitions of n in descending lexicographic order: (n), (n-1,1), ..., (1,...,1).
std::vector<Partition> all_partitions(std::int64_t n);

}  // namespace plie
