#pragma once

#include <stdexcept>
#include <string>

namespace fmres {

// Library errors carry a stable machine-readable kind() used by the CLI.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
    virtual const char* kind() const noexcept { return "Error"; }
};

#define FMRES_DEFINE_ERROR(NAME)                                        \
    class NAME : public Error {                                         \
    public:                                                             \
        explicit NAME(const std::string& msg) : Error(msg) {}           \
        const char* kind() const noexcept override { return #NAME; }    \
    }

FMRES_DEFINE_ERROR(RankMismatch);
FMRES_DEFINE_ERROR(KindMismatch);
FMRES_DEFINE_ERROR(NotPrimitive);
FMRES_DEFINE_ERROR(Degenerate);
FMRES_DEFINE_ERROR(PossiblyInfinite);
FMRES_DEFINE_ERROR(ParseError);
FMRES_DEFINE_ERROR(InvalidConfig);
FMRES_DEFINE_ERROR(NotSmooth);

#undef FMRES_DEFINE_ERROR

// Raised when a partner family cannot reach the requested size; carries
// the smallest even multiplicity whose lower bound would suffice.
class InsufficientPartners : public Error {
public:
    InsufficientPartners(const std::string& msg, long long suggested_m)
        : Error(msg), suggested_even_m(suggested_m) {}
    const char* kind() const noexcept override { return "InsufficientPartners"; }

    long long suggested_even_m;
};

} // namespace fmres
