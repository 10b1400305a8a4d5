#include <fresco/cli_harness.hpp>

#include <iomanip>
#include <sstream>

namespace fresco
{

bool Report::ok() const
{
    for (const auto &p : properties) {
        if (p.failed > 0) {
            return false;
        }
    }
    return true;
}

const PropertyResult *Report::find(const std::string &name) const
{
    for (const auto &p : properties) {
        if (p.name == name) {
            return &p;
        }
    }
    return nullptr;
}

Json Report::to_json() const
{
    Json props = Json::array();
    for (const auto &p : properties) {
        props.push_back({{"name", p.name},
                         {"passed", p.passed},
                         {"failed", p.failed},
                         {"retries", p.retries},
                         {"skipped", p.skipped}});
    }
    Json cex = Json::array();
    for (const auto &c : counterexamples) {
        // seeds exceed the exact range of JSON doubles in some readers
        cex.push_back({{"property", c.property}, {"seed", std::to_string(c.seed)}, {"detail", c.detail},
                       {"inputs", c.inputs}});
    }
    return {{"title", title},
            {"ok", ok()},
            {"properties", props},
            {"counterexamples", cex},
            {"wall_seconds", wall_seconds}};
}

std::string Report::to_text() const
{
    std::ostringstream out;
    out << title << ": " << (ok() ? "PASS" : "FAIL") << " (" << std::fixed << std::setprecision(2) << wall_seconds
        << " s)\n";
    for (const auto &p : properties) {
        out << "  " << std::left << std::setw(28) << p.name << " pass " << p.passed << "  fail " << p.failed;
        if (p.retries > 0) {
            out << "  retries " << p.retries;
        }
        if (p.skipped > 0) {
            out << "  skipped " << p.skipped;
        }
        out << '\n';
    }
    for (const auto &c : counterexamples) {
        out << "  counterexample " << c.property << " seed " << c.seed << ": " << c.detail << '\n';
    }
    return out.str();
}

} // namespace fresco
