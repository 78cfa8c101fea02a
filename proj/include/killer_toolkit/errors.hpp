#pragma once
// Error taxonomy. Input problems throw; semidecidable outcomes are result
// values (LimitExceeded, NotFound, Unknown), never exceptions.

#include <stdexcept>
#include <string>

namespace kt {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define KT_ERROR(Name)                                                     \
    struct Name : Error {                                                  \
        explicit Name(const std::string& msg) : Error(#Name ": " + msg) {} \
    }

KT_ERROR(ParseError);
KT_ERROR(MalformedInput);
KT_ERROR(SelfReferentialSubstitution);
KT_ERROR(DuplicateGenerator);
KT_ERROR(NotSolvable);
KT_ERROR(InvalidParameters);
KT_ERROR(NotNormalizable);
KT_ERROR(DecompositionFailure);
KT_ERROR(CollapseFailure);
KT_ERROR(NotAKnotGroupPresentation);
KT_ERROR(DegenerateRelator);
KT_ERROR(DegenerateLambda);
KT_ERROR(ConvergenceFailure);
KT_ERROR(InvalidDiagram);
KT_ERROR(IndexOutOfRange);
KT_ERROR(NoUnknottingCrossingFound);

#undef KT_ERROR

}
