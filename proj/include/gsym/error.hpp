#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gsym {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A probability outside (0,1) handed to a quantile routine.
class domain_error : public error {
public:
    using error::error;
};

class budget_error : public error {
public:
    budget_error(std::size_t cells, std::size_t budget)
        : error("grid of " + std::to_string(cells) + " cells exceeds the cell budget of " +
                std::to_string(budget)),
          cells_(cells) {}
    std::size_t cells() const noexcept { return cells_; }

private:
    std::size_t cells_;
};

class unknown_field : public error {
public:
    explicit unknown_field(const std::string& name) : error("unknown field family '" + name + "'") {}
};

class invalid_parameter : public error {
public:
    using error::error;
};

/// Parsed field expression failed. The offset is a byte offset into the input.
class parse_error : public error {
public:
    enum class kind { syntax, arity, variable };

    parse_error(kind k, std::size_t offset, const std::string& what)
        : error(what + " at offset " + std::to_string(offset)), kind_(k), offset_(offset) {}

    kind which() const noexcept { return kind_; }
    std::size_t offset() const noexcept { return offset_; }

private:
    kind kind_;
    std::size_t offset_;
};

class weight_sum_error : public error {
public:
    using error::error;
};

class non_smooth_field : public error {
public:
    using error::error;
};

class interval_error : public error {
public:
    using error::error;
};

/// Luxemburg bisection could not bracket the norm.
class convergence_error : public error {
public:
    using error::error;
};

}  // namespace gsym
