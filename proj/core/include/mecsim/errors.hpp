#ifndef MECSIM_ERRORS_HPP
#define MECSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mecsim {

// Base for all simulator errors. `code()` is a stable machine-readable tag
// used by the CLI and the REST layers to map errors onto responses.
class SimError : public std::runtime_error {
public:
    SimError(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define MECSIM_DEFINE_ERROR(Name, Code)                                       \
    class Name : public SimError {                                            \
    public:                                                                   \
        explicit Name(const std::string& what) : SimError(Code, what) {}      \
    }

// kernel
MECSIM_DEFINE_ERROR(PastTimeError, "PastTime");
MECSIM_DEFINE_ERROR(UnroutableError, "Unroutable");
MECSIM_DEFINE_ERROR(ModeMismatchError, "ModeMismatch");

// descriptors / scenario
MECSIM_DEFINE_ERROR(MissingFieldError, "MissingField");
MECSIM_DEFINE_ERROR(BadValueError, "BadValue");
MECSIM_DEFINE_ERROR(UnknownHostError, "UnknownHost");
MECSIM_DEFINE_ERROR(DuplicateNameError, "DuplicateName");
MECSIM_DEFINE_ERROR(NegativeResourceError, "NegativeResource");

// orchestration
MECSIM_DEFINE_ERROR(DuplicateAppDIdError, "DuplicateAppDId");
MECSIM_DEFINE_ERROR(NoSuitableHostError, "NoSuitableHost");
MECSIM_DEFINE_ERROR(UnknownAppDIdError, "UnknownAppDId");
MECSIM_DEFINE_ERROR(UnknownContextError, "UnknownContext");
MECSIM_DEFINE_ERROR(IllegalStateError, "IllegalState");

// mec host
MECSIM_DEFINE_ERROR(InsufficientResourcesError, "InsufficientResources");
MECSIM_DEFINE_ERROR(UnknownAppError, "UnknownApp");
MECSIM_DEFINE_ERROR(ZeroRateError, "ZeroRate");

// services
MECSIM_DEFINE_ERROR(UnknownUeError, "UnknownUe");
MECSIM_DEFINE_ERROR(BadRadiusError, "BadRadius");
MECSIM_DEFINE_ERROR(UnknownSubscriptionError, "UnknownSubscription");

// bridge
MECSIM_DEFINE_ERROR(BindFailureError, "BindFailure");

// cli
MECSIM_DEFINE_ERROR(CorruptLogError, "CorruptLog");

#undef MECSIM_DEFINE_ERROR

} // namespace mecsim

#endif
