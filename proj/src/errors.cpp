#include "shocklayer/errors.hpp"

namespace sl {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::SpeedExceedsLimit: return "SpeedExceedsLimit";
    case Errc::OutOfSupersonicBranch: return "OutOfSupersonicBranch";
    case Errc::EpsilonTooLarge: return "EpsilonTooLarge";
    case Errc::NegativeAbscissa: return "NegativeAbscissa";
    case Errc::OutsideTube: return "OutsideTube";
    case Errc::DetachedShock: return "DetachedShock";
    case Errc::NotSupersonic: return "NotSupersonic";
    case Errc::DegenerateShock: return "DegenerateShock";
    case Errc::NotOnPolar: return "NotOnPolar";
    case Errc::VacuumState: return "VacuumState";
    case Errc::InsufficientStencil: return "InsufficientStencil";
    case Errc::NegativeSlope: return "NegativeSlope";
    case Errc::SingularSystem: return "SingularSystem";
    case Errc::CharacteristicsDiverge: return "CharacteristicsDiverge";
    case Errc::CorrectorStall: return "CorrectorStall";
    case Errc::ShockFormation: return "ShockFormation";
    case Errc::CharacteristicMissesWall: return "CharacteristicMissesWall";
    case Errc::NewtonDiverged: return "NewtonDiverged";
    case Errc::EntropyViolation: return "EntropyViolation";
    case Errc::ShockDegenerate: return "ShockDegenerate";
    case Errc::VacuumFreestream: return "VacuumFreestream";
    case Errc::InsufficientLines: return "InsufficientLines";
    case Errc::InsufficientSweep: return "InsufficientSweep";
    case Errc::CertificateMismatch: return "CertificateMismatch";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace sl
