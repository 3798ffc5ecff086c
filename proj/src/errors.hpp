#pragma once

#include <stdexcept>
#include <string>

namespace npgen {

enum class ErrorKind {
  Io,
  Parse,
  Validation,
  UnknownLemma,
  BadId,
  BadArgument,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct IoError : Error {
  explicit IoError(std::string m) : Error(ErrorKind::Io, std::move(m)) {}
};

// Parse failures carry file/line context in the message.
struct ParseError : Error {
  explicit ParseError(std::string m) : Error(ErrorKind::Parse, std::move(m)) {}
};

struct ValidationError : Error {
  explicit ValidationError(std::string m) : Error(ErrorKind::Validation, std::move(m)) {}
};

class UnknownLemmaError : public Error {
 public:
  UnknownLemmaError(std::string lemma, const std::string& table)
      : Error(ErrorKind::UnknownLemma,
              "unknown " + table + " lemma '" + lemma + "'"),
        lemma_(std::move(lemma)) {}

  const std::string& lemma() const { return lemma_; }

 private:
  std::string lemma_;
};

struct BadIdError : Error {
  explicit BadIdError(std::string m) : Error(ErrorKind::BadId, std::move(m)) {}
};

struct BadArgumentError : Error {
  explicit BadArgumentError(std::string m) : Error(ErrorKind::BadArgument, std::move(m)) {}
};

struct InternalError : Error {
  explicit InternalError(std::string m) : Error(ErrorKind::Internal, std::move(m)) {}
};

}  // namespace npgen
