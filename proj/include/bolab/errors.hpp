#pragma once

#include <stdexcept>
#include <string>

namespace bolab {

// Corner lists that violate the strict interlacing ordering, or phase
// parameters out of order.
struct ordering_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A band or gap length that is not an integer multiple of its unit.
struct incommensurable_error : std::runtime_error {
    incommensurable_error(const std::string& what, double length)
        : std::runtime_error(what), offending_length(length) {}
    double offending_length;
};

// Evaluation at a pole or a singular matrix inversion.
struct singularity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Eigenvector labeling could not pick a unique partition.
struct degeneracy_error : std::runtime_error {
    degeneracy_error(const std::string& what, std::vector<std::string> cands)
        : std::runtime_error(what), candidates(std::move(cands)) {}
    std::vector<std::string> candidates;
};

}  // namespace bolab
