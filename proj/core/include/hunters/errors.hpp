#pragma once

#include <stdexcept>
#include <string>

namespace hunters {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define HUNTERS_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                      \
    public:                                                          \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

HUNTERS_DEFINE_ERROR(ParseError);
HUNTERS_DEFINE_ERROR(NotConnected);
HUNTERS_DEFINE_ERROR(SizeLimitExceeded);
HUNTERS_DEFINE_ERROR(EmptyShot);
HUNTERS_DEFINE_ERROR(NotWinning);
HUNTERS_DEFINE_ERROR(InvalidSubgraph);
HUNTERS_DEFINE_ERROR(InvalidPartition);
HUNTERS_DEFINE_ERROR(NotInterval);
HUNTERS_DEFINE_ERROR(NotCover);
HUNTERS_DEFINE_ERROR(BadParameters);
HUNTERS_DEFINE_ERROR(InternalError);

#undef HUNTERS_DEFINE_ERROR

}  // namespace hunters
