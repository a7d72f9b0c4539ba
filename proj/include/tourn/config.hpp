#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace tourn {

/// Base of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input or violated precondition. Maps to CLI exit status 1.
class DomainError : public Error {
public:
    using Error::Error;
};

/// An exact search refused to run because its input exceeds a configured cap.
/// Maps to CLI exit status 2. Exact searches never fall back to heuristics.
class CapExceeded : public Error {
public:
    CapExceeded(std::string cap, int limit, int actual)
        : Error("cap exceeded: " + cap + " allows n <= " + std::to_string(limit) +
                ", got n = " + std::to_string(actual)),
          cap_(std::move(cap)), limit_(limit), actual_(actual) {}

    const std::string& cap() const noexcept { return cap_; }
    int limit() const noexcept { return limit_; }
    int actual() const noexcept { return actual_; }

private:
    std::string cap_;
    int limit_;
    int actual_;
};

/// Per-search vertex-count caps. Every exact search checks its cap on entry.
struct Caps {
    int chromatic = 24;
    int feedback = 24;
    int forest = 20;
    int weak_forest = 12;
    int star = 64;
    int homogeneous = 64;  // pairwise closure runs on 64-bit masks
    int q5_partition = 15;
    int expansion = 24;
    int ex_n = 7;
    int t_transitive_n = 8;
    int t_general_n = 6;

    /// Name/value view used for config echo and `--cap name=value` parsing.
    std::map<std::string, int*> table() {
        return {{"chromatic", &chromatic},     {"feedback", &feedback},
                {"forest", &forest},           {"weak_forest", &weak_forest},
                {"star", &star},               {"homogeneous", &homogeneous},
                {"q5_partition", &q5_partition}, {"expansion", &expansion},
                {"ex_n", &ex_n},               {"t_transitive_n", &t_transitive_n},
                {"t_general_n", &t_general_n}};
    }
    std::map<std::string, int> values() const {
        auto copy = *this;
        std::map<std::string, int> out;
        for (auto& [k, v] : copy.table()) out[k] = *v;
        return out;
    }
};

inline void check_cap(const char* name, int limit, int n) {
    if (n > limit) throw CapExceeded(name, limit, n);
}

/// Budget for branch-and-bound searches. Zero means unlimited. The node budget is
/// deterministic; the wall-clock timeout is not and is meant for interactive use.
struct SearchLimits {
    std::uint64_t max_nodes = 0;
    double timeout_seconds = 0.0;
};

namespace detail {

class Budget {
public:
    explicit Budget(const SearchLimits& lim)
        : lim_(lim), start_(std::chrono::steady_clock::now()) {}

    /// Counts one node; returns false once the budget is spent.
    bool tick() {
        ++nodes_;
        if (exhausted_) return false;
        if (lim_.max_nodes != 0 && nodes_ > lim_.max_nodes) exhausted_ = true;
        if (lim_.timeout_seconds > 0.0 && (nodes_ & 0x3ff) == 0) {
            std::chrono::duration<double> el = std::chrono::steady_clock::now() - start_;
            if (el.count() > lim_.timeout_seconds) exhausted_ = true;
        }
        return !exhausted_;
    }
    bool exhausted() const { return exhausted_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    SearchLimits lim_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

}  // namespace detail
}  // namespace tourn
