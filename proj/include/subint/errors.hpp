#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace subint
{

// Malformed formula text. `offset` is the byte offset of the offending token.
class parse_error : public std::runtime_error
{
    std::size_t _offset;

public:
    parse_error( const std::string& what, std::size_t offset )
        : std::runtime_error{ what + " at offset " + std::to_string( offset ) }, _offset{ offset } {}

    [[nodiscard]] std::size_t offset() const { return _offset; }
};

// A configured size guard refused the request (combinatorial blowup).
class resource_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Ill-formed frame, model or document. `pointer` is a JSON pointer when the
// problem came from a file, empty otherwise.
class model_error : public std::runtime_error
{
    std::string _pointer;

public:
    explicit model_error( const std::string& what, std::string pointer = {} )
        : std::runtime_error{ pointer.empty() ? what : pointer + ": " + what }, _pointer{ std::move( pointer ) } {}

    [[nodiscard]] const std::string& pointer() const { return _pointer; }
};

// Caller broke a documented precondition (e.g. an axiom that is not a closed
// negative axiom).
class precondition_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// A construction produced something its correctness argument rules out.
// Seeing one of these means there is a bug.
class invariant_error : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

} // namespace subint
