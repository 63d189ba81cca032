#ifndef SEGQUANT_ERRORS_HPP
#define SEGQUANT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace segquant {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// ---- grid / label-map errors
class GridMismatchError : public Error { public: using Error::Error; };
class UncoveredLabelError : public Error { public: using Error::Error; };

// ---- file I/O errors
class HeaderCorruptError : public Error { public: using Error::Error; };
class UnsupportedDatatypeError : public Error { public: using Error::Error; };
class NonIntegralLabelsError : public Error { public: using Error::Error; };
class ScalingUnsupportedError : public Error { public: using Error::Error; };
class LengthMismatchError : public Error { public: using Error::Error; };
class SidecarInvalidError : public Error { public: using Error::Error; };
class IoFailureError : public Error { public: using Error::Error; };
class ManifestInvalidError : public Error { public: using Error::Error; };

// ---- metric errors
class EmptyMaskError : public Error { public: using Error::Error; };

// ---- morphometry errors
class ScaleTooLargeError : public Error { public: using Error::Error; };
class TooFewScalesError : public Error { public: using Error::Error; };
class InsufficientVoxelsError : public Error { public: using Error::Error; };
class ScaleRangeTooNarrowError : public Error { public: using Error::Error; };

// ---- phantom errors
class GridTooSmallError : public Error { public: using Error::Error; };
class LevelOutOfRangeError : public Error { public: using Error::Error; };

// ---- stats errors
class SampleLengthMismatchError : public Error { public: using Error::Error; };
class TooFewSamplesError : public Error { public: using Error::Error; };
class ZeroVarianceError : public Error { public: using Error::Error; };
class IncompleteMatrixError : public Error { public: using Error::Error; };
class TooFewSubjectsError : public Error { public: using Error::Error; };
class DegenerateXError : public Error { public: using Error::Error; };
class NonConvergenceError : public Error { public: using Error::Error; };

} // namespace segquant

#endif
