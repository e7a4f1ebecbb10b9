// Verdicts and reports shared by every checker.
#pragma once

#include <concepts>
#include <stdexcept>
#include <string>
#include <vector>

namespace bed {

enum class Verdict { pass, fail, vacuous, out_of_bound, premise_failure, chart_too_shallow };
const char* to_string(Verdict v);

struct Check {
    std::string name;
    std::string subject;
    Verdict verdict = Verdict::pass;
    std::string witness;
    long checked = 0;
};

struct Report {
    std::string title;
    std::vector<Check> checks;
    std::vector<std::string> notes;

    Check& add(std::string name, std::string subject, Verdict v, std::string witness = {}, long checked = 0);
    void merge(const Report& other);
    bool failed() const;
    long count(Verdict v) const;
    std::string text() const;
    std::string machine() const;
};

// Accumulates one universally quantified check.
class Quant {
public:
    // returns false once a counterexample has been recorded
    bool hold(bool ok, const std::string& witness)
    {
        ++checked_;
        if (!ok && !failed_) {
            failed_ = true;
            witness_ = witness;
        }
        return ok;
    }
    template <std::invocable F>
    bool hold(bool ok, F&& witness)
    {
        ++checked_;
        if (!ok && !failed_) {
            failed_ = true;
            witness_ = witness();
        }
        return ok;
    }
    bool failed() const { return failed_; }
    long checked() const { return checked_; }
    Verdict verdict() const { return failed_ ? Verdict::fail : checked_ == 0 ? Verdict::vacuous : Verdict::pass; }
    Check& emit(Report& r, std::string name, std::string subject) const
    {
        return r.add(std::move(name), std::move(subject), verdict(), witness_, checked_);
    }

private:
    long checked_ = 0;
    bool failed_ = false;
    std::string witness_;
};

// Raised when a structural precondition of an operation does not hold.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Raised when the chart lacks an internal witness an operation needs.
struct ChartTooShallow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace bed
