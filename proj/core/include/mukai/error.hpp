#pragma once

#include <stdexcept>
#include <string>

namespace mukai {

// Domain failures carry a stable machine-readable kind (used by the CLI to
// report errors as JSON) plus a human message.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string kind, std::string message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)),
          message_(std::move(message)) {}

    const std::string& kind() const noexcept { return kind_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::string kind_;
    std::string message_;
};

namespace errkind {
inline constexpr const char* parse_error = "ParseError";
inline constexpr const char* undetermined_pairing = "UndeterminedPairing";
inline constexpr const char* non_pure_class = "NonPureClass";
inline constexpr const char* phase_undefined = "PhaseUndefined";
inline constexpr const char* unsupported = "Unsupported";
inline constexpr const char* degenerate_pair = "DegeneratePair";
inline constexpr const char* empty_wall = "EmptyWall";
inline constexpr const char* non_integral_input = "NonIntegralInput";
inline constexpr const char* parity_mismatch = "ParityMismatch";
inline constexpr const char* dimension_mismatch = "DimensionMismatch";
inline constexpr const char* odd_cube = "OddCube";
inline constexpr const char* negative_cube = "NegativeCube";
inline constexpr const char* invalid_lattice = "InvalidLattice";
inline constexpr const char* invalid_argument = "InvalidArgument";
} // namespace errkind

} // namespace mukai
