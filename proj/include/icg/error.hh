/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ICG_ERROR_HH
#define ICG_ERROR_HH

#include <stdexcept>
#include <string>
#include <string_view>

namespace icg
{
    enum class ErrorKind
    {
        SelfLoop,
        DuplicateEdge,
        VertexOutOfRange,
        BadParams,
        MalformedGraph6,
        MalformedJson,
        NotAPartition,
        ExceedsBound,
        NotApplicable,
        NoTarget,
        InvalidHomomorphism,
        EdgeNotInTarget,
        NotInvolution,
        PreconditionFailed,
        InternalError
    };

    auto to_string(ErrorKind kind) -> std::string_view;

    /// Every failure raised by the library carries one of the kinds above, so
    /// callers (the CLI in particular) can branch on it without string matching.
    class Error : public std::runtime_error
    {
        private:
            ErrorKind _kind;

        public:
            Error(ErrorKind kind, const std::string & detail);

            auto kind() const -> ErrorKind
            {
                return _kind;
            }
    };
}

#endif
