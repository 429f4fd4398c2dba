#ifndef angulation_report_hpp
#define angulation_report_hpp

#include <string>
#include <vector>

namespace angulation {

enum class Severity { note, error };

struct ReportEntry {
    Severity severity = Severity::error;
    std::string code;    // short machine-readable tag, e.g. "arc-multiplicity"
    std::string detail;
};

struct Report {
    std::vector<ReportEntry> entries;

    bool ok() const {
        for (const auto& e : entries)
            if (e.severity == Severity::error) return false;
        return true;
    }

    void error(std::string code, std::string detail) {
        entries.push_back({Severity::error, std::move(code), std::move(detail)});
    }

    void note(std::string code, std::string detail) {
        entries.push_back({Severity::note, std::move(code), std::move(detail)});
    }

    void merge(const Report& other) {
        entries.insert(entries.end(), other.entries.begin(), other.entries.end());
    }

    std::string to_string() const {
        std::string out;
        for (const auto& e : entries) {
            out += (e.severity == Severity::error ? "error [" : "note  [");
            out += e.code;
            out += "] ";
            out += e.detail;
            out += '\n';
        }
        return out;
    }
};

using ValidationReport = Report;

}

#endif
