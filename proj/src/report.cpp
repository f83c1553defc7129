#include <vertexkernel/report.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace vk
{

void ValidationReport::merge(const ValidationReport &other, const std::string &prefix)
{
    for (auto c : other.checks_) {
        if (!prefix.empty()) {
            c.id = prefix + "/" + c.id;
        }
        checks_.push_back(std::move(c));
    }
}

bool ValidationReport::passed() const
{
    return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult &c) { return c.informational || c.passed; });
}

const CheckResult *ValidationReport::find(const std::string &id) const
{
    for (const auto &c : checks_) {
        if (c.id == id) {
            return &c;
        }
    }
    return nullptr;
}

const CheckResult *ValidationReport::first_failure() const
{
    for (const auto &c : checks_) {
        if (!c.informational && !c.passed) {
            return &c;
        }
    }
    return nullptr;
}

void ValidationReport::sort_by_id()
{
    std::stable_sort(checks_.begin(), checks_.end(), [](const CheckResult &a, const CheckResult &b) { return a.id < b.id; });
}

std::string ValidationReport::to_text(bool with_timings) const
{
    std::ostringstream os;
    for (const auto &c : checks_) {
        const char *tag = c.passed ? "PASS" : (c.informational ? "INFO" : "FAIL");
        os << "[" << tag << "] " << c.id << " (" << c.formula << "), " << c.instances << " instances";
        if (with_timings) {
            os << ", " << std::fixed << std::setprecision(3) << c.seconds << " s";
        }
        os << "\n";
        if (!c.passed) {
            os << "       witness: " << c.witness << "\n";
        }
        if (!c.note.empty()) {
            os << "       note: " << c.note << "\n";
        }
    }
    os << "overall: " << (passed() ? "pass" : "fail") << "\n";
    return os.str();
}

} // namespace vk
