#pragma once

#include <cstddef>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace qk {

/// Raised when caller-supplied data violates a documented precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input text that does not follow one of the file grammars.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Outcome of an exhaustive search. `none_exists` is a proven negative;
/// `cap_exceeded` means the search refused to run and proves nothing.
enum class SearchStatus { found, none_exists, cap_exceeded };

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none_exists: return "none_exists";
    case SearchStatus::cap_exceeded: return "cap_exceeded";
  }
  return "?";
}

template <class T>
struct Outcome {
  SearchStatus status = SearchStatus::cap_exceeded;
  std::optional<T> value;

  static Outcome found(T v) { return {SearchStatus::found, std::move(v)}; }
  static Outcome none() { return {SearchStatus::none_exists, std::nullopt}; }
  static Outcome refused() { return {SearchStatus::cap_exceeded, std::nullopt}; }

  bool ok() const noexcept { return status == SearchStatus::found; }
  // Throws std::bad_optional_access unless ok().
  const T& operator*() const& { return value.value(); }
  T operator*() && { return std::move(value.value()); }
  const T* operator->() const { return &value.value(); }
};

/// Vertex-count limits for the exponential searches.
struct SearchCaps {
  std::size_t enumeration = 24;
  std::size_t exact = 40;
};

/// Hard ceiling of the bitmask search engine.
inline constexpr std::size_t kMaxExactVertices = 64;

namespace detail {

[[noreturn]] inline void internal_defect(const char* where, const std::string& what) {
  std::fprintf(stderr, "qk: internal defect in %s: %s\n", where, what.c_str());
  std::abort();
}

}  // namespace detail
}  // namespace qk
