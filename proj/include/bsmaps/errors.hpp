#pragma once

#include <stdexcept>
#include <string>

namespace bsmaps {

/// Base of every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define BSMAPS_DEFINE_ERROR(Name)      \
  class Name : public Error {          \
   public:                             \
    using Error::Error;                \
  }

/// Inputs coincide within tolerance, or a geodesic grazes a vertex.
BSMAPS_DEFINE_ERROR(DegenerateError);
/// Vanishing denominator while applying a map; signals corrupted data.
BSMAPS_DEFINE_ERROR(SingularityError);
/// Three-point data does not define an automorphism of the disk.
BSMAPS_DEFINE_ERROR(NotDiskAutomorphismError);
/// Map has no two fixed points on the circle.
BSMAPS_DEFINE_ERROR(NotHyperbolicError);
/// Side index or genus out of range.
BSMAPS_DEFINE_ERROR(IndexError);
/// A constructed surface fails one of its defining relations.
BSMAPS_DEFINE_ERROR(ConstructionError);
/// Malformed textual input (parameter words, group words, JSON).
BSMAPS_DEFINE_ERROR(ParseError);
/// A solved point lies outside the arc it is proven to lie in.
BSMAPS_DEFINE_ERROR(RangeError);
/// Type-2 and Type-4 recursion chains met, or the recursion cycled.
BSMAPS_DEFINE_ERROR(ContradictionError);
/// Inverse search found no preimage, or more than one.
BSMAPS_DEFINE_ERROR(BijectivityError);
/// Transition-matrix row disagrees with its numeric endpoint images.
BSMAPS_DEFINE_ERROR(MarkovError);
/// Two descriptions of one domain disagree.
BSMAPS_DEFINE_ERROR(StructureError);
/// Point outside the domain an operation requires.
BSMAPS_DEFINE_ERROR(DomainError);

#undef BSMAPS_DEFINE_ERROR

}  // namespace bsmaps
