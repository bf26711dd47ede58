#pragma once

#include <stdexcept>
#include <string>

namespace adapteval {

/// Base class of every error thrown by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ADAPTEVAL_DEFINE_ERROR(Name)  \
  class Name : public Error {         \
   public:                            \
    using Error::Error;               \
  };

// corpus
ADAPTEVAL_DEFINE_ERROR(ParseError)            // malformed record, message names the line
ADAPTEVAL_DEFINE_ERROR(DuplicateIdError)      // repeated document id within one corpus
ADAPTEVAL_DEFINE_ERROR(EmptyCorpusError)
ADAPTEVAL_DEFINE_ERROR(InvalidParameterError)

// metrics
ADAPTEVAL_DEFINE_ERROR(EmptyInputError)
ADAPTEVAL_DEFINE_ERROR(DimensionError)
ADAPTEVAL_DEFINE_ERROR(NoScoreableTokensError)

// tds
ADAPTEVAL_DEFINE_ERROR(ZeroDomainMassError)
ADAPTEVAL_DEFINE_ERROR(EmptySupportError)
ADAPTEVAL_DEFINE_ERROR(NoDomainStepsError)
ADAPTEVAL_DEFINE_ERROR(InconsistentTracesError)

// harness
ADAPTEVAL_DEFINE_ERROR(ArityError)
ADAPTEVAL_DEFINE_ERROR(InsufficientShotsError)
ADAPTEVAL_DEFINE_ERROR(UnfittablePromptError)
ADAPTEVAL_DEFINE_ERROR(TokenizerMismatchError)
ADAPTEVAL_DEFINE_ERROR(BackendError)          // propagated backend failure, message carries the step

// judge
ADAPTEVAL_DEFINE_ERROR(UnparseableVerdictError)
ADAPTEVAL_DEFINE_ERROR(JudgeUnavailableError)

// cli / pipeline
ADAPTEVAL_DEFINE_ERROR(ConfigError)
ADAPTEVAL_DEFINE_ERROR(StageError)            // message names stage and sample id
ADAPTEVAL_DEFINE_ERROR(IoError)

#undef ADAPTEVAL_DEFINE_ERROR

}  // namespace adapteval
