#ifndef NCRES_ERRORS_HPP
#define NCRES_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncres
{

// Malformed input to an operation (dimension mismatch, mixed degrees, ...).
class validation_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain (Gamma at z <= 0, theta != 0 where 0 is required).
class domain_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// The stored expansion does not reach the degree a computation needs.
class insufficient_expansion_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Euler antiderivatives requested at the degree -n.
class critical_degree_error : public validation_error
{
public:
    using validation_error::validation_error;
};

enum class parse_error_kind {
    syntax,
    homogeneity,
    mixed_generators,
    theta_without_generators,
    structure,
};

// Rejected symbol text. line/column are 1-based; 0 when the input has no text positions (JSON).
class parse_error : public std::runtime_error
{
public:
    parse_error(parse_error_kind kind, const std::string &msg, std::size_t line, std::size_t column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg), m_kind(kind),
          m_line(line), m_column(column)
    {
    }

    parse_error_kind kind() const noexcept
    {
        return m_kind;
    }

    std::size_t line() const noexcept
    {
        return m_line;
    }
    std::size_t column() const noexcept
    {
        return m_column;
    }

private:
    parse_error_kind m_kind;
    std::size_t m_line;
    std::size_t m_column;
};

} // namespace ncres

#endif
