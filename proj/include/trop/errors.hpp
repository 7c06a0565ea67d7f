#pragma once

#include <stdexcept>
#include <string>

namespace trop {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define TROP_ERROR(Name)                          \
    struct Name : Error {                         \
        using Error::Error;                       \
        Name() : Error(#Name) {}                  \
    }

TROP_ERROR(DisconnectedGraph);
TROP_ERROR(NonpositiveLength);
TROP_ERROR(NonIntegralLengths);
TROP_ERROR(EmptySubgraph);
TROP_ERROR(NotEquivalent);
TROP_ERROR(NotAVertex);
TROP_ERROR(NotBasePointFree);
TROP_ERROR(Unbalanced);
TROP_ERROR(NotInSpan);
TROP_ERROR(NotReady);
TROP_ERROR(NotDivisible);
TROP_ERROR(NotSuperstable);
TROP_ERROR(TooLarge);
TROP_ERROR(RankDisagreement);

#undef TROP_ERROR

}  // namespace trop
