#pragma once

#include <stdexcept>
#include <string>

namespace sasaki {

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define SASAKI_ERROR_TYPE(Name)                                   \
  struct Name : Error {                                           \
    explicit Name(const std::string& what) : Error(what) {}       \
  }

SASAKI_ERROR_TYPE(DimensionMismatch);
SASAKI_ERROR_TYPE(SingularMatrix);
SASAKI_ERROR_TYPE(DegenerateGram);
SASAKI_ERROR_TYPE(DegeneratePlane);
SASAKI_ERROR_TYPE(NotHorizontal);
SASAKI_ERROR_TYPE(NotAssociated);
SASAKI_ERROR_TYPE(NotInM);
SASAKI_ERROR_TYPE(NotContactMetric);
SASAKI_ERROR_TYPE(KNotLessThanOne);
SASAKI_ERROR_TYPE(NonPositiveParameter);
SASAKI_ERROR_TYPE(InvalidParameter);
SASAKI_ERROR_TYPE(UnsupportedFamily);
SASAKI_ERROR_TYPE(InvariantOutOfRange);
SASAKI_ERROR_TYPE(NonPositiveDefinite);
SASAKI_ERROR_TYPE(ParameterOutOfRange);
SASAKI_ERROR_TYPE(ModelMismatch);
SASAKI_ERROR_TYPE(StructureMismatch);
SASAKI_ERROR_TYPE(NotLegendreCandidate);
SASAKI_ERROR_TYPE(JsonFormatError);

#undef SASAKI_ERROR_TYPE

}  // namespace sasaki
