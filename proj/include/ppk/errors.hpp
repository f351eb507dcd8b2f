#ifndef PPK_ERRORS_HPP
#define PPK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ppk {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct SyntaxError : Error {
    size_t position;
    SyntaxError(const std::string& what, size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct UnknownGenerator : Error {
    using Error::Error;
};

struct DuplicateGenerator : Error {
    using Error::Error;
};

struct UnknownLetter : Error {
    using Error::Error;
};

struct InvalidStructure : Error {
    using Error::Error;
};

struct InvalidDecoration : Error {
    using Error::Error;
};

struct NotReduced : Error {
    using Error::Error;
};

struct NotBlocked : Error {
    using Error::Error;
};

struct NoBlock : Error {
    using Error::Error;
};

struct IncompleteTable : Error {
    using Error::Error;
};

struct SearchBudgetExceeded : Error {
    using Error::Error;
};

struct NotAPath : Error {
    using Error::Error;
};

struct NotTwoConnected : Error {
    using Error::Error;
};

struct NotThreeConnected : Error {
    using Error::Error;
};

struct NotConsistent : Error {
    using Error::Error;
};

struct NotPlanar : Error {
    using Error::Error;
};

struct InvalidRotation : Error {
    using Error::Error;
};

struct InputError : Error {
    using Error::Error;
};

} // namespace ppk

#endif
