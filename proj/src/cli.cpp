#include "flagcycle/cli.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "flagcycle/conditions.hpp"
#include "flagcycle/enumerate.hpp"
#include "flagcycle/error.hpp"
#include "flagcycle/flags.hpp"
#include "flagcycle/geometry.hpp"
#include "flagcycle/intersect.hpp"
#include "flagcycle/oracle.hpp"
#include "flagcycle/perm.hpp"

namespace flagcycle {

namespace {

using json = nlohmann::ordered_json;

std::vector<int> parts_of(const DimensionSequence& d) { return {d.parts().begin(), d.parts().end()}; }

// Resolves --n / --dims into one dimension sequence.
DimensionSequence resolve_dims(const std::optional<int>& n, const std::optional<std::string>& dims) {
  if (dims) {
    auto d = DimensionSequence::parse(*dims);
    if (n && *n != d.n())
      throw parse_error("dimension sequence (" + d.str() + ") sums to " + std::to_string(d.n()) + ", not " + std::to_string(*n));
    return d;
  }
  if (!n) throw parse_error("one of --n or --dims is required");
  if (*n < 1) throw parse_error("--n must be positive");
  return DimensionSequence::full_flag(*n);
}

DimensionSequence dims_for_perm(const Permutation& w, const std::optional<std::string>& dims) {
  auto d = dims ? DimensionSequence::parse(*dims) : DimensionSequence::full_flag(w.size());
  require_same_size(w, d);
  return d;
}

void render_text(const json& j, std::ostream& out) {
  if (!j.is_object()) {
    out << j.dump() << '\n';
    return;
  }
  for (const auto& [key, value] : j.items()) {
    out << key << ": ";
    if (value.is_string())
      out << value.get<std::string>();
    else
      out << value.dump();
    out << '\n';
  }
}

void emit(const json& j, const std::string& format, std::ostream& out) {
  if (format == "text")
    render_text(j, out);
  else
    out << j.dump(2) << '\n';
}

json orbit_json(const std::map<int, long>& tally) {
  json orbits = json::array();
  for (const auto& [sign, count] : tally) {
    json o;
    o["orientation"] = sign == 0 ? json(nullptr) : json(sign);
    o["count"] = count;
    orbits.push_back(std::move(o));
  }
  return orbits;
}

int cmd_enumerate(int n, const std::optional<std::string>& dims, const std::string& format, std::ostream& out) {
  const auto d = resolve_dims(n, dims);
  json j;
  j["n"] = d.n();
  j["dims"] = parts_of(d);
  j["kind"] = std::string(to_string(d.kind()));
  json results = json::array();
  std::vector<std::string> lines;
  if (d.kind() == FlagKind::full_flag) {
    for (const auto& w : enumerate_fullflag(d.n())) {
      results.push_back(w.str());
      lines.push_back(w.compact());
    }
  } else if (d.is_symmetric()) {
    for (const auto& e : enumerate_measurable(d)) {
      json r;
      r["w"] = e.w.str();
      r["blocks"] = block_string(e.w, d);
      r["lift"] = e.lift.str();
      results.push_back(std::move(r));
      lines.push_back(block_string(e.w, d) + "  lift " + e.lift.compact());
    }
  } else {
    const auto model = measurable_model(d);
    for (const auto& e : enumerate_nonmeasurable(d)) {
      json r;
      r["w"] = e.w.str();
      r["blocks"] = block_string(e.w, d);
      r["w_hat"] = e.w_hat.str();
      r["w_hat_blocks"] = block_string(e.w_hat, model.model);
      results.push_back(std::move(r));
      lines.push_back(block_string(e.w, d) + "  from " + block_string(e.w_hat, model.model));
    }
  }
  if (format == "text") {
    for (const auto& line : lines) out << line << '\n';
    return 0;
  }
  j["count"] = results.size();
  j["results"] = std::move(results);
  out << j.dump(2) << '\n';
  return 0;
}

int cmd_check(const std::string& perm, const std::optional<std::string>& dims, const std::string& format,
              std::ostream& out) {
  const auto w = Permutation::parse(perm);
  const auto d = dims_for_perm(w, dims);
  json j;
  if (d.kind() == FlagKind::full_flag) {
    j["spacing"] = spacing(w);
    j["double_box"] = double_box(w);
    j["length"] = length(w);
    j["critical_length"] = critical_length(w.size());
  } else if (d.is_symmetric()) {
    const auto u = min_rep(w, d);
    j["min_rep"] = u.str();
    j["blocks"] = block_string(u, d);
    j["generalized_spacing"] = generalized_spacing(u, d);
    j["generalized_double_box"] = generalized_double_box(u, d);
    j["length"] = length(u);
    j["expected_length"] = expected_schubert_dim(d);
    j["lift"] = generalized_double_box(u, d) ? json(canonical_rearrangement(u, d).str()) : json(nullptr);
  } else {
    const auto u = min_rep(w, d);
    const auto model = measurable_model(d);
    j["min_rep"] = u.str();
    j["blocks"] = block_string(u, d);
    j["model"] = parts_of(model.model);
    j["t"] = model.t;
    json w_hat(nullptr);
    for (const auto& e : enumerate_nonmeasurable(d))
      if (e.w == u) w_hat = e.w_hat.str();
    j["member"] = !w_hat.is_null();
    j["w_hat"] = w_hat;
    j["length"] = length(u);
    j["expected_length"] = expected_schubert_dim(d);
  }
  emit(j, format, out);
  return 0;
}

int cmd_intersect(const std::string& perm, const std::optional<std::string>& dims, const std::string& format,
                  std::ostream& out) {
  const auto w = Permutation::parse(perm);
  const auto d = dims_for_perm(w, dims);
  const auto points = intersection_points(min_rep(w, d), d);
  json j;
  j["perm"] = w.str();
  j["dims"] = parts_of(d);
  j["count"] = points.size();
  const bool oriented = orbit_count(d) == 2;
  if (oriented) {
    std::map<int, long> tally;
    json signs = json::array();
    for (const auto& z : points) {
      const int s = orientation(z);
      ++tally[s];
      signs.push_back(s);
    }
    j["orientation_classes"] = orbit_json(tally);
    j["orientations"] = std::move(signs);
  }
  json flags = json::array();
  for (const auto& z : points) flags.push_back(to_json(z));
  j["points"] = std::move(flags);
  emit(j, format, out);
  return 0;
}

int cmd_homology(const std::optional<int>& n, const std::optional<std::string>& dims, const std::string& format,
                 std::ostream& out) {
  const auto d = resolve_dims(n, dims);
  const auto h = homology_class(d);
  json j;
  j["coefficient"] = h.coefficient;
  json classes = json::array();
  for (const auto& w : h.classes) classes.push_back(w.str());
  j["classes"] = std::move(classes);
  emit(j, format, out);
  return 0;
}

int cmd_model(const std::string& dims, const std::string& format, std::ostream& out) {
  const auto m = measurable_model(DimensionSequence::parse(dims));
  json j;
  j["model"] = parts_of(m.model);
  j["t"] = m.t;
  j["delta"] = m.delta;
  j["dim_drop"] = m.dim_drop;
  emit(j, format, out);
  return 0;
}

int cmd_verify(const std::optional<std::string>& perm, const std::optional<int>& n,
               const std::optional<std::string>& dims, int trials, std::uint64_t seed, const std::string& format,
               std::ostream& out) {
  if (perm) {
    const auto w = Permutation::parse(*perm);
    const auto d = dims_for_perm(w, dims);
    const auto report = verify_intersection(w, d);
    emit(to_json(report), format, out);
    return report.pass ? 0 : 1;
  }
  if (!n) throw parse_error("verify needs --perm or --n");
  if (dims) throw parse_error("--dims applies to verify --perm only");
  if (trials < 0) throw parse_error("--trials must be non-negative");
  const auto report = verify_sweep(*n, trials, seed);
  emit(to_json(report), format, out);
  return report.pass() ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schubert varieties dual to base cycles in SL(n,R)-flag domains", "flagcycle"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Print help for all subcommands");

  std::string format = "json";
  std::optional<int> n;
  std::optional<std::string> dims, perm;
  std::string model_dims;
  int trials = 50;
  std::uint64_t seed = 1;

  std::string enumerate_format = "text";
  auto add_format = [](CLI::App* sub, std::string& target) {
    sub->add_option("--format", target, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  };

  auto* enumerate = app.add_subcommand("enumerate", "List the Schubert varieties dual to the base cycle");
  enumerate->add_option("--n", n, "Ambient dimension")->required();
  enumerate->add_option("--dims", dims, "Dimension sequence d1,d2,...");
  add_format(enumerate, enumerate_format);

  auto* check = app.add_subcommand("check", "Evaluate the combinatorial conditions on a permutation");
  check->add_option("--perm", perm, "One-line permutation, e.g. 2,5,6,3,4,1")->required();
  check->add_option("--dims", dims, "Dimension sequence (default: full flag)");
  add_format(check, format);

  auto* intersect = app.add_subcommand("intersect", "Construct the intersection points with the base cycle");
  intersect->add_option("--perm", perm, "One-line permutation")->required();
  intersect->add_option("--dims", dims, "Dimension sequence (default: full flag)");
  add_format(intersect, format);

  auto* homology = app.add_subcommand("homology", "Homology class of the base cycle");
  homology->add_option("--n", n, "Ambient dimension (full flag)");
  homology->add_option("--dims", dims, "Symmetric dimension sequence");
  add_format(homology, format);

  auto* model = app.add_subcommand("model", "Measurable model of a dimension sequence");
  model->add_option("--dims", model_dims, "Dimension sequence")->required();
  add_format(model, format);

  auto* verify = app.add_subcommand("verify", "Certify one permutation, or sweep every check for one n");
  verify->add_option("--perm", perm, "One-line permutation");
  verify->add_option("--n", n, "Sweep all checks for this n (2..8)");
  verify->add_option("--dims", dims, "Dimension sequence for --perm");
  verify->add_option("--trials", trials, "Sampled cell points per permutation")->default_val(50);
  verify->add_option("--seed", seed, "Sampling seed")->default_val(1);
  add_format(verify, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(*n, dims, enumerate_format, out);
    if (check->parsed()) return cmd_check(*perm, dims, format, out);
    if (intersect->parsed()) return cmd_intersect(*perm, dims, format, out);
    if (homology->parsed()) return cmd_homology(n, dims, format, out);
    if (model->parsed()) return cmd_model(model_dims, format, out);
    if (verify->parsed()) {
      if (perm && n) throw parse_error("give either --perm or --n, not both");
      return cmd_verify(perm, n, dims, trials, seed, format, out);
    }
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const precondition_error& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace flagcycle
