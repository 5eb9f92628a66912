#pragma once

#include <stdexcept>
#include <string>

namespace nbc {

// Base class for every error the library throws. what() always starts with
// the error name, e.g. "DuplicateEdge: (0, 1)".
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

namespace detail {
inline std::string tagged(const char* name, const std::string& what) {
    return what.empty() ? std::string(name) : std::string(name) + ": " + what;
}
}  // namespace detail

#define NBC_ERROR_TYPE(Name)                               \
    class Name : public Error {                            \
    public:                                                \
        explicit Name(const std::string& what = "")        \
            : Error(detail::tagged(#Name, what)) {}        \
    };

NBC_ERROR_TYPE(SelfLoop)
NBC_ERROR_TYPE(DuplicateEdge)
NBC_ERROR_TYPE(IndexOutOfRange)
NBC_ERROR_TYPE(InvalidFamilyParams)
NBC_ERROR_TYPE(SizeOverflow)
NBC_ERROR_TYPE(InvalidPalette)
NBC_ERROR_TYPE(LengthMismatch)
NBC_ERROR_TYPE(NotAPermutation)
NBC_ERROR_TYPE(PaletteMismatch)
NBC_ERROR_TYPE(NotAdmissible)
NBC_ERROR_TYPE(HypothesisViolation)
NBC_ERROR_TYPE(InputNotBalanced)
NBC_ERROR_TYPE(CountsNotEqual)
NBC_ERROR_TYPE(BadAnchors)
NBC_ERROR_TYPE(InstanceTooLarge)
NBC_ERROR_TYPE(ParseError)

#undef NBC_ERROR_TYPE

}  // namespace nbc
