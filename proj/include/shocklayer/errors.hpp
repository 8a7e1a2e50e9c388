#pragma once

#include <stdexcept>
#include <string>

namespace sl {

enum class Errc {
  SpeedExceedsLimit,
  OutOfSupersonicBranch,
  EpsilonTooLarge,
  NegativeAbscissa,
  OutsideTube,
  DetachedShock,
  NotSupersonic,
  DegenerateShock,
  NotOnPolar,
  VacuumState,
  InsufficientStencil,
  NegativeSlope,
  SingularSystem,
  CharacteristicsDiverge,
  CorrectorStall,
  ShockFormation,
  CharacteristicMissesWall,
  NewtonDiverged,
  EntropyViolation,
  ShockDegenerate,
  VacuumFreestream,
  InsufficientLines,
  InsufficientSweep,
  CertificateMismatch,
  ParseError,
  ValidationError,
};

const char* errc_name(Errc c);

// Every failure in the library is an sl::Error carrying one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace sl
