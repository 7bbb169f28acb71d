#pragma once

#include <stdexcept>
#include <string>

namespace dflab {

enum class ErrorCode {
  DimensionMismatch,
  NonFinite,
  NonHermitian,
  RankDeficient,
  NoConvergence,
  AmbiguousFootPoint,
  EmptyBoundary,
  NoNullSpace,
  BranchCut,
  ParamBound,
  LogDomain,
  FamilyTooLarge,
  DominationFailure,
  EstimateFailure,
  ThetaNotPositive,
  ShellOutsideTube,
  NoFeasibleEta,
  SignCondition,
  OutsideBox,
  BlendGap,
  WrongStratum,
  HypothesisFailure,
  NoCollarFound,
  ConfigError,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NonHermitian: return "NonHermitian";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::AmbiguousFootPoint: return "AmbiguousFootPoint";
    case ErrorCode::EmptyBoundary: return "EmptyBoundary";
    case ErrorCode::NoNullSpace: return "NoNullSpace";
    case ErrorCode::BranchCut: return "BranchCut";
    case ErrorCode::ParamBound: return "ParamBound";
    case ErrorCode::LogDomain: return "LogDomain";
    case ErrorCode::FamilyTooLarge: return "FamilyTooLarge";
    case ErrorCode::DominationFailure: return "DominationFailure";
    case ErrorCode::EstimateFailure: return "EstimateFailure";
    case ErrorCode::ThetaNotPositive: return "ThetaNotPositive";
    case ErrorCode::ShellOutsideTube: return "ShellOutsideTube";
    case ErrorCode::NoFeasibleEta: return "NoFeasibleEta";
    case ErrorCode::SignCondition: return "SignCondition";
    case ErrorCode::OutsideBox: return "OutsideBox";
    case ErrorCode::BlendGap: return "BlendGap";
    case ErrorCode::WrongStratum: return "WrongStratum";
    case ErrorCode::HypothesisFailure: return "HypothesisFailure";
    case ErrorCode::NoCollarFound: return "NoCollarFound";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

} // namespace dflab
