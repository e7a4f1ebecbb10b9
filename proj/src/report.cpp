#include "bed/report.hpp"

#include <array>

namespace bed {

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::vacuous: return "vacuous";
    case Verdict::out_of_bound: return "out-of-bound";
    case Verdict::premise_failure: return "premise-failure";
    case Verdict::chart_too_shallow: return "chart-too-shallow";
    }
    return "?";
}

Check& Report::add(std::string name, std::string subject, Verdict v, std::string witness, long checked)
{
    checks.push_back({std::move(name), std::move(subject), v, std::move(witness), checked});
    return checks.back();
}

void Report::merge(const Report& o)
{
    checks.insert(checks.end(), o.checks.begin(), o.checks.end());
    notes.insert(notes.end(), o.notes.begin(), o.notes.end());
}

bool Report::failed() const
{
    for (const auto& c : checks)
        if (c.verdict == Verdict::fail) return true;
    return false;
}

long Report::count(Verdict v) const
{
    long n = 0;
    for (const auto& c : checks) n += c.verdict == v;
    return n;
}

static constexpr std::array kAll{Verdict::pass, Verdict::fail, Verdict::vacuous, Verdict::out_of_bound,
                                 Verdict::premise_failure, Verdict::chart_too_shallow};

std::string Report::text() const
{
    std::string s = "== " + title + "\n";
    for (const auto& n : notes) s += "note: " + n + "\n";
    for (const auto& c : checks) {
        s += "[" + std::string(to_string(c.verdict)) + "] " + c.name;
        if (!c.subject.empty()) s += " @ " + c.subject;
        if (c.checked) s += " (" + std::to_string(c.checked) + " witnesses)";
        if (!c.witness.empty()) s += " -- " + c.witness;
        s += "\n";
    }
    s += "summary:";
    for (Verdict v : kAll) s += " " + std::string(to_string(v)) + "=" + std::to_string(count(v));
    return s + "\n";
}

std::string Report::machine() const
{
    std::string s;
    for (const auto& n : notes) s += "note\t" + title + "\t" + n + "\n";
    for (const auto& c : checks)
        s += "check\t" + title + "\t" + c.name + "\t" + c.subject + "\t" + to_string(c.verdict) + "\t" +
             std::to_string(c.checked) + "\t" + c.witness + "\n";
    for (Verdict v : kAll) s += "total\t" + title + "\t" + to_string(v) + "\t" + std::to_string(count(v)) + "\n";
    return s;
}

} // namespace bed
