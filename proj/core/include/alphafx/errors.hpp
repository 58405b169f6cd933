#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace alphafx {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// checkpoint loading
class MissingTensor : public Error {
  public:
    explicit MissingTensor(const std::string& name)
        : Error("missing tensor: " + name), name(name) {}
    std::string name;
};

class ShapeMismatch : public Error {
  public:
    ShapeMismatch(const std::string& name, const std::string& expected, const std::string& got)
        : Error("shape mismatch for " + name + ": expected " + expected + ", got " + got),
          name(name) {}
    std::string name;
};

class NonFiniteWeight : public Error {
  public:
    explicit NonFiniteWeight(const std::string& name)
        : Error("non-finite values in tensor: " + name), name(name) {}
    std::string name;
};

// forward pass
class SequenceTooLong : public Error {
  public:
    SequenceTooLong(size_t length, size_t limit)
        : Error("sequence of " + std::to_string(length) + " tokens exceeds the " +
                std::to_string(limit) + "-position limit") {}
};

class UnknownTokenId : public Error {
  public:
    UnknownTokenId(long id, long vocab_size)
        : Error("token id " + std::to_string(id) + " outside vocabulary of " +
                std::to_string(vocab_size)) {}
};

// tokenization / alignment
class VocabLoadError : public Error {
  public:
    using Error::Error;
};

class AlignmentGap : public Error {
  public:
    using Error::Error;
};

// lexing / parsing
class LexError : public Error {
  public:
    LexError(size_t position, const std::string& what)
        : Error("lex error at byte " + std::to_string(position) + ": " + what),
          position(position) {}
    size_t position;
};

class ParseError : public Error {
  public:
    using Error::Error;
};

// AST documents
class SchemaError : public Error {
  public:
    using Error::Error;
};

class CyclicParentLinks : public Error {
  public:
    using Error::Error;
};

class SpanOutOfBounds : public Error {
  public:
    using Error::Error;
};

class LeafMismatch : public Error {
  public:
    using Error::Error;
};

// corpus
class MissingField : public Error {
  public:
    using Error::Error;
};

class InsufficientSnippets : public Error {
  public:
    InsufficientSnippets(size_t eligible, size_t requested)
        : Error("requested " + std::to_string(requested) + " snippets but only " +
                std::to_string(eligible) + " are eligible"),
          eligible(eligible),
          requested(requested) {}
    size_t eligible;
    size_t requested;
};

// reporting
class IndexOutOfRange : public Error {
  public:
    using Error::Error;
};

class TooManyParseFailures : public Error {
  public:
    using Error::Error;
};

}  // namespace alphafx
