#ifndef SEPSTAR_ERRORS_HPP
#define SEPSTAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sepstar
{

// Operands live on charts of different dimension.
class dimension_mismatch : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// A result would need coefficients beyond the order to which an input is known.
class order_exhausted : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class degenerate_metric : public std::runtime_error
{
public:
    degenerate_metric() : std::runtime_error("degenerate metric at base point") {}
};

class not_in_image : public std::domain_error
{
public:
    not_in_image() : std::domain_error("symbol not in the image of E") {}
};

class parse_error : public std::invalid_argument
{
public:
    parse_error(const std::string &msg, std::size_t pos)
        : std::invalid_argument(msg + " at position " + std::to_string(pos)), pos_(pos)
    {
    }
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

} // namespace sepstar

#endif
