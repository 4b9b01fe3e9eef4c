#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace conngraph {

enum class Errc {
    InvalidInput,
    MissingFace,
    EmptySet,
    Duplicate,
    SizeLimit,
    UnknownVertex,
    IllegalMove,
    NotAConnectionGraph,
    LemmaCViolation,
    CertificateFailure,
    NonInjective,
    NotOneDimensional,
    Parse,
};

inline std::string_view errc_name(Errc e) {
    switch (e) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::MissingFace: return "MissingFace";
    case Errc::EmptySet: return "EmptySet";
    case Errc::Duplicate: return "Duplicate";
    case Errc::SizeLimit: return "SizeLimit";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::IllegalMove: return "IllegalMove";
    case Errc::NotAConnectionGraph: return "NotAConnectionGraph";
    case Errc::LemmaCViolation: return "LemmaCViolation";
    case Errc::CertificateFailure: return "CertificateFailure";
    case Errc::NonInjective: return "NonInjective";
    case Errc::NotOneDimensional: return "NotOneDimensional";
    case Errc::Parse: return "Parse";
    }
    return "Unknown";
}

/// Domain error raised by every operation in the library. The code tells the
/// caller which contract was violated; the message is human readable.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// validate() failure carrying the offending set and the smallest missing subset.
class MissingFaceError : public Error {
public:
    MissingFaceError(std::vector<std::uint32_t> set, std::vector<std::uint32_t> missing, const std::string& what)
        : Error(Errc::MissingFace, what), set_(std::move(set)), missing_(std::move(missing)) {}

    const std::vector<std::uint32_t>& set() const noexcept { return set_; }
    const std::vector<std::uint32_t>& missing() const noexcept { return missing_; }

private:
    std::vector<std::uint32_t> set_;
    std::vector<std::uint32_t> missing_;
};

/// psi_to_phi_trace failure: the pair (y, z) (vertex ids in ψ(G)) whose
/// common neighbourhood is not contractible.
class LemmaCError : public Error {
public:
    LemmaCError(std::size_t y, std::size_t z, const std::string& what)
        : Error(Errc::LemmaCViolation, what), y_(y), z_(z) {}

    std::size_t y() const noexcept { return y_; }
    std::size_t z() const noexcept { return z_; }

private:
    std::size_t y_, z_;
};

/// product_extension_trace failure at the k-th copy of the new vertex.
class CertificateError : public Error {
public:
    CertificateError(std::size_t k, const std::string& what)
        : Error(Errc::CertificateFailure, what), k_(k) {}

    std::size_t index() const noexcept { return k_; }

private:
    std::size_t k_;
};

}  // namespace conngraph
