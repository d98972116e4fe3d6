#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace alcove {

// e == kInfiniteE encodes the infinite-quantum-characteristic regime.
inline constexpr long long kInfiniteE = -1;

struct Params {
    long long e = kInfiniteE;          // quantum characteristic, >= 2 or kInfiniteE
    int h = 1;                         // column bound per component
    int ell = 1;                       // number of components
    std::vector<long long> kappa;      // multicharge, one entry per component

    bool finite() const { return e != kInfiniteE; }
    int rank() const { return h * ell; }
};

using Partition = std::vector<int>;            // weakly decreasing positive parts
using Multipartition = std::vector<Partition>; // exactly ell components
using Weight = std::vector<long long>;         // point of Z^{h*ell}
using Path = std::vector<int>;                 // step coordinates, 0-based internally

// Box of a multipartition: row, column (both 1-based), component (1-based).
struct Node {
    int row = 1;
    int col = 1;
    int comp = 1;

    friend auto operator<=>(const Node&, const Node&) = default;
};

// Loading key (theta-coordinate, diagonal coordinate); lexicographic order,
// smaller key = more dominant position.
struct LoadingKey {
    long long primary = 0;
    long long secondary = 0;

    friend auto operator<=>(const LoadingKey&, const LoadingKey&) = default;
};

struct ModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidParams : ModelError { using ModelError::ModelError; };
struct SizeMismatch : ModelError { using ModelError::ModelError; };
struct NotHRestricted : ModelError { using ModelError::ModelError; };
struct IrregularOrigin : ModelError { using ModelError::ModelError; };
struct DegenerateHyperplane : ModelError { using ModelError::ModelError; };
struct NotOnHyperplane : ModelError { using ModelError::ModelError; };
struct NotLinked : ModelError { using ModelError::ModelError; };
struct MultipleMaxima : ModelError { using ModelError::ModelError; };
struct WrongRegime : ModelError { using ModelError::ModelError; };
struct NegativeCoefficient : ModelError { using ModelError::ModelError; };
struct InternalInconsistency : ModelError { using ModelError::ModelError; };

}  // namespace alcove
