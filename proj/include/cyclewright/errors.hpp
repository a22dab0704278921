#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cw {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input does not satisfy an operation's hypothesis. CLI exit code 2.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class NoOutGenerator : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class InfeasibleParameters : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// Peeling emptied the graph although the arc count looked sufficient.
class Degenerate : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// Search gave up before reaching a definitive answer. CLI exit code 3.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class ImproperInput : public Error {
public:
    using Error::Error;
};

class DomainMismatch : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// A lemma's promised bound failed on a concrete instance; `instance` holds
// the digraph in text form so it can be replayed.
class LemmaViolation : public Error {
public:
    LemmaViolation(std::string lemma, const std::string& message, std::string instance)
        : Error(lemma + ": " + message), lemma_(std::move(lemma)), instance_(std::move(instance)) {}
    const std::string& lemma() const noexcept { return lemma_; }
    const std::string& instance() const noexcept { return instance_; }

private:
    std::string lemma_, instance_;
};

}  // namespace cw
