#pragma once

#include <string>

#include "isoprod/presets.hpp"
#include "isoprod/report.hpp"

namespace isoprod {

/// One parsed invocation. `preset` selects a built-in surface;
/// `surface_file` loads an inline description instead.
struct RunConfig {
  std::string command;
  std::string preset;
  std::string surface_file;
  std::int64_t window = 2;
  std::string characters = "trivial";  // trivial | all | "w,..;w,..;..."
  std::string collection;              // "a,b,c,d[@w,..];..." or empty for the default quadruple
  std::string format = "text";         // text | json
  std::string out;                     // output path, empty = stdout
  std::int64_t scan_bound = 0;         // 0 = per-command default
  std::int64_t phantom_a = 0;
  std::int64_t phantom_b = 0;

  nlohmann::json to_json() const;
};

/// Inline surface description, line oriented:
///   group N1 N2 ...
///   curve NAME genus G
///   orbit LABEL c1 c2 ...   (stabilizer generator coordinates)
/// with the second `curve` line starting the D block. '#' starts a comment.
ProductQuotientSurface parse_surface_description(const std::string& text);

ProductQuotientSurface load_surface(const RunConfig& cfg);

/// Parses "a,b,c,d[@w1,w2,...]" members separated by ';' into bundles with
/// coefficients over the first two orbits of each curve.
std::vector<EquivariantLineBundle> parse_collection(const std::string& spec,
                                                    const ProductQuotientSurface& s);

/// The default verification target: (O, O(E2-2E1), O(F2-2F1),
/// O(E2-2E1+F2-2F1)) with trivial characters.
std::vector<EquivariantLineBundle> default_quadruple(const ProductQuotientSurface& s);

Report cmd_describe(const RunConfig& cfg);
Report cmd_verify(const RunConfig& cfg);
Report cmd_search(const RunConfig& cfg);
Report cmd_height(const RunConfig& cfg);
Report cmd_nogo(const RunConfig& cfg);
Report cmd_phantom_pair(const RunConfig& cfg);

/// Dispatch + timing + config hash. Configuration errors come back as a
/// report with exit code 2 and an `error` entry.
Report run_command(const RunConfig& cfg);

std::string render_text(const Report& r);

}  // namespace isoprod
