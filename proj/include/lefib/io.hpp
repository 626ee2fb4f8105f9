#ifndef LEFIB_IO_HPP
#define LEFIB_IO_HPP

#include "lefib/universal.hpp"

#include <iosfwd>
#include <optional>

namespace lefib {

enum class ParseCode {
    version,
    syntax,
    unknown_curve,
    unknown_word,
    duplicate_name,
    malformed_vector,
    semantic,
};

const char* parse_code_name(ParseCode c);

struct ParseError : std::runtime_error {
    ParseError(std::size_t line, ParseCode code, const std::string& message);
    std::size_t line;
    ParseCode code;
};

// One parsed document. Sections keep their canonical order: SURFACE, CURVE,
// WORD, FIBRATION, PRESENTATION, PLAN, REPORT. Curve and word names must be
// defined before use.
struct FibrationRecord {
    int base_genus = 0;
    int base_boundary = 0;
    IntVec twist;
    std::string lefschetz;
    std::vector<std::string> bundle;
    bool declared_surjective = false;

    bool operator==(const FibrationRecord& o) const;
};

struct PresentationRecord {
    std::vector<std::string> generators;
    std::vector<std::string> relators;

    bool operator==(const PresentationRecord& o) const = default;
};

struct PlanRecord {
    std::size_t disk_count = 0;
    std::vector<HandleStep> steps;

    bool operator==(const PlanRecord& o) const;
};

struct Document {
    std::string format_version = "1";
    std::optional<FiberSurface> surface;
    std::vector<CurveClass> curves;
    std::vector<std::pair<std::string, TwistWord>> words;
    std::vector<FibrationRecord> fibrations;
    std::vector<PresentationRecord> presentations;
    std::vector<PlanRecord> plans;
    std::vector<std::pair<std::string, std::string>> report;

    const CurveClass* find_curve(const std::string& name) const;
    const TwistWord* find_word(const std::string& name) const;

    FibrationData resolve_fibration(std::size_t index) const;
    Presentation resolve_presentation(std::size_t index) const;

    bool operator==(const Document& o) const;
};

Document parse_document(std::istream& in);
Document parse_document(const std::string& text);

std::string print_document(const Document& d);

// Builds a self-contained document for computed fibrations: curves get
// canonical class names, words are named lef1, bw1_1, ...
Document document_from_fibrations(const std::vector<FibrationData>& fs);

// Command line entry point shared by the lefib tool and the tests; returns
// the process exit code (0 ok, 1 validation failure, 2 parse error, 3
// unsupported input).
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lefib

#endif
