#ifndef EQUI_ERRORS_HPP
#define EQUI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace equi {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidPermutation : Error { using Error::Error; };
struct GroupTooLarge : Error { using Error::Error; };
struct NotAGroup : Error { using Error::Error; };
struct PointOutOfRange : Error { using Error::Error; };
struct NotASubgroup : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct ComponentMismatch : Error { using Error::Error; };
struct PointNotInOrbit : Error { using Error::Error; };
struct InvalidCount : Error { using Error::Error; };
struct InvalidBlocks : Error { using Error::Error; };
struct UnsupportedValueDim : Error { using Error::Error; };
struct GroupMismatch : Error { using Error::Error; };
struct InvalidTransversal : Error { using Error::Error; };
struct InvalidPartition : Error { using Error::Error; };
struct UnsupportedDegree : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

}  // namespace equi

#endif
