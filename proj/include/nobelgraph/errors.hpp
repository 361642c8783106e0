#pragma once

#include <stdexcept>
#include <string>

namespace nobelgraph {

// Base for everything thrown by the library. CLI maps UserError -> exit 1,
// anything else -> exit 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class UserError : public Error {
public:
    explicit UserError(const std::string& msg) : Error(msg) {}
};

class SchemaViolation : public UserError {
public:
    explicit SchemaViolation(const std::string& msg) : UserError(msg) {}
};

class InvalidInput : public UserError {
public:
    explicit InvalidInput(const std::string& msg) : UserError(msg) {}
};

class IoError : public UserError {
public:
    explicit IoError(const std::string& msg) : UserError(msg) {}
};

// Snapshot/file parse failure; position is 1-based line, 0-based byte offset
// within that line.
class FileParseError : public UserError {
public:
    FileParseError(const std::string& msg, std::size_t line, std::size_t offset)
        : UserError(msg + " (line " + std::to_string(line) + ", offset " +
                    std::to_string(offset) + ")"),
          line_(line),
          offset_(offset) {}

    std::size_t line() const { return line_; }
    std::size_t offset() const { return offset_; }

private:
    std::size_t line_;
    std::size_t offset_;
};

} // namespace nobelgraph
