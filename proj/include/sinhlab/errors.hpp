#pragma once

#include <stdexcept>
#include <string>

namespace sinhlab {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define SINHLAB_ERROR(Name)                                              \
    struct Name : Error {                                                \
        explicit Name(const std::string& what = #Name) : Error(what) {}  \
    }

SINHLAB_ERROR(NonConvergence);
SINHLAB_ERROR(DomainError);
SINHLAB_ERROR(NoSignChange);
SINHLAB_ERROR(NewtonDiverged);
SINHLAB_ERROR(BranchCut);
SINHLAB_ERROR(OnContour);
SINHLAB_ERROR(OnCut);
SINHLAB_ERROR(WrongSheet);
SINHLAB_ERROR(UndefinedOnCut);
SINHLAB_ERROR(CoincidentPoints);
SINHLAB_ERROR(OutsideRadius);
SINHLAB_ERROR(RegionMismatch);
SINHLAB_ERROR(SingularBimomentMatrix);
SINHLAB_ERROR(TailBoundFailure);
SINHLAB_ERROR(LogBranch);
SINHLAB_ERROR(AnalyticityViolation);
SINHLAB_ERROR(BracketFailure);
SINHLAB_ERROR(ConfigError);

#undef SINHLAB_ERROR

}  // namespace sinhlab
