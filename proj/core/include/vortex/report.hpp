#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vortex/model_io.hpp"

namespace vortex {

enum class Section { Stability, Moduli, Kahler, Volume, Energy, Embedding, Limit };

const std::vector<Section>& all_sections();
const char* section_name(Section s);
std::optional<Section> section_from_name(const std::string& name);

struct ReportOptions {
  unsigned digits = 12;
};

struct SectionStatus {
  Section section;
  // "ok", "not_applicable" (the model has no such quantity) or "error".
  std::string status;
};

struct Report {
  // JSON, two-space indented, terminated by a newline.
  std::string json;
  std::vector<SectionStatus> statuses;
  bool any_error() const;
  bool all_ok() const;
};

// Sections run in the order given. Each scalar is reported as
// {"exact", "coefficients", "approx"}; a failing section is replaced by
// {"status": ..., "error": {"kind", "message"}}.
Report build_report(const ModelFile& file, const std::vector<Section>& sections, const ReportOptions& opts = {});
// Human-readable rendering of a report produced by build_report.
std::string render_text(const std::string& report_json);
// Parse and re-serialize; byte-identical for build_report output.
std::string rerender_json(const std::string& report_json);

}  // namespace vortex
