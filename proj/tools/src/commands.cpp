#include "sek3/tools/commands.hpp"

#include "sek3/tools/identity_suite.hpp"

#include "sek3/calculus.hpp"
#include "sek3/io.hpp"
#include "sek3/kinematics.hpp"
#include "sek3/so3.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

namespace sek3::tools {

namespace {

using nlohmann::json;

// Failure tied to a line of an input file.
struct ParseFailure {
  std::string file;
  int line;
  std::string message;
};

struct JsonLine {
  int line;
  json value;
};

std::vector<JsonLine> read_json_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseFailure{path, 0, "cannot open file"};
  std::vector<JsonLine> out;
  std::string text;
  int line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back({line, json::parse(text)});
    } catch (const json::parse_error& e) {
      throw ParseFailure{path, line, e.what()};
    }
    if (!out.back().value.is_object()) throw ParseFailure{path, line, "expected a JSON object"};
  }
  return out;
}

double read_number(const json& j, const char* field) {
  const auto it = j.find(field);
  if (it == j.end() || !it->is_number()) {
    throw Error(ErrorKind::InvalidArgument, std::string("field '") + field + "' must be a number");
  }
  const double v = it->get<double>();
  if (!std::isfinite(v)) {
    throw Error(ErrorKind::InvalidArgument, std::string("field '") + field + "' is not finite");
  }
  return v;
}

// Reads a list of 3-vectors. The list length is checked against k; a wrong
// count is a dimension mismatch, a malformed entry a parse error.
Mat3X read_vec3_list(const json& j, const char* field, int k) {
  const auto it = j.find(field);
  if (it == j.end() || !it->is_array()) {
    throw Error(ErrorKind::InvalidArgument, std::string("field '") + field + "' must be an array");
  }
  if (static_cast<int>(it->size()) != k) {
    throw Error(ErrorKind::DimensionMismatch, std::string("field '") + field + "' has " +
                                                  std::to_string(it->size()) +
                                                  " entries, expected K = " + std::to_string(k));
  }
  Mat3X m(3, k);
  for (int c = 0; c < k; ++c) {
    const json& v = (*it)[static_cast<std::size_t>(c)];
    if (!v.is_array() || v.size() != 3) {
      throw Error(ErrorKind::InvalidArgument,
                  std::string("field '") + field + "' entries must be 3-element arrays");
    }
    for (int r = 0; r < 3; ++r) {
      if (!v[static_cast<std::size_t>(r)].is_number()) {
        throw Error(ErrorKind::InvalidArgument, std::string("field '") + field + "' is not numeric");
      }
      m(r, c) = v[static_cast<std::size_t>(r)].get<double>();
      if (!std::isfinite(m(r, c))) {
        throw Error(ErrorKind::InvalidArgument, std::string("field '") + field + "' is not finite");
      }
    }
  }
  return m;
}

// Fixed-size fields; a wrong length is malformed input rather than a K mismatch.
Vec3 read_vec3(const json& j, const char* field) {
  const auto it = j.find(field);
  if (it != j.end() && it->is_array() && it->size() != 3) {
    throw Error(ErrorKind::InvalidArgument, std::string("field '") + field + "' must have 3 entries");
  }
  return read_reals(j, field, 3);
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument:
      return kUsageOrParse;
    case ErrorKind::DimensionMismatch:
      return kDimensionMismatch;
    case ErrorKind::RankDeficient:
      return kRankDeficient;
    case ErrorKind::NonDecreasingCost:
      return kNonDecreasingCost;
    default:
      return kRuntimeFailure;
  }
}

// Runs body and maps failures to exit codes with a one-line diagnostic.
template <typename Body>
int guarded(std::ostream& err, const Body& body) {
  try {
    return body();
  } catch (const ParseFailure& f) {
    err << "error: " << f.file;
    if (f.line > 0) err << ":" << f.line;
    err << ": " << f.message << "\n";
    return kUsageOrParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

// Re-raises a library error from one input line with the line attached,
// keeping the kind so the exit code is unchanged.
template <typename Fn>
auto at_line(const std::string& file, int line, const Fn& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument) throw ParseFailure{file, line, e.what()};
    throw Error(e.kind(), file + ":" + std::to_string(line) + ": " + e.what());
  } catch (const json::exception& e) {
    throw ParseFailure{file, line, e.what()};
  }
}

GroupElement read_element_file(const std::string& path, int k) {
  const std::vector<JsonLine> lines = read_json_lines(path);
  if (lines.size() != 1) throw ParseFailure{path, 0, "expected exactly one GroupElement record"};
  const GroupElement g =
      at_line(path, lines[0].line, [&] { return group_element_from_json(lines[0].value); });
  require_same_k(g.k(), k, "initial state vs --k");
  return g;
}

void write_csv_header(std::ostream& os, int k) {
  os << "t";
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) os << ",r" << r << c;
  }
  for (int j = 1; j <= k; ++j) os << ",p" << j << "x,p" << j << "y,p" << j << "z";
  os << "\n";
}

void write_csv_row(std::ostream& os, double t, const GroupElement& g) {
  os << t;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) os << "," << g.rotation()(r, c);
  }
  for (int j = 0; j < g.k(); ++j) {
    for (int a = 0; a < 3; ++a) os << "," << g.translations()(a, j);
  }
  os << "\n";
}

struct VelocityRecord {
  double t;
  GeneralizedVelocity v;
};

VelocityRecord parse_velocity(const json& j, int k) {
  VelocityRecord rec;
  rec.t = read_number(j, "t");
  const auto frame = j.find("frame");
  if (frame == j.end() || !frame->is_string()) {
    throw Error(ErrorKind::InvalidArgument, "field 'frame' must be \"left\" or \"right\"");
  }
  Side side;
  if (*frame == "left") {
    side = Side::Left;
  } else if (*frame == "right") {
    side = Side::Right;
  } else {
    throw Error(ErrorKind::InvalidArgument, "field 'frame' must be \"left\" or \"right\"");
  }
  rec.v = GeneralizedVelocity(side, read_vec3(j, "omega"), read_vec3_list(j, "nu", k));
  return rec;
}

}  // namespace

int cmd_deadreckon(const DeadReckonOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    if (opts.k < 0) throw Error(ErrorKind::InvalidArgument, "--k must be >= 0");
    if (!(opts.dt > 0.0) || !std::isfinite(opts.dt)) {
      throw Error(ErrorKind::InvalidArgument, "--dt must be positive");
    }
    GroupElement g = opts.initial ? read_element_file(*opts.initial, opts.k)
                                  : GroupElement::identity(opts.k);

    // Parse everything before writing so a bad line leaves no partial output.
    std::vector<VelocityRecord> records;
    double t_prev = 0.0;
    for (const JsonLine& line : read_json_lines(opts.input)) {
      VelocityRecord rec = at_line(opts.input, line.line,
                                   [&] { return parse_velocity(line.value, opts.k); });
      if (!(rec.t > t_prev)) {
        throw ParseFailure{opts.input, line.line,
                           "timestamps must be strictly increasing from t = 0"};
      }
      t_prev = rec.t;
      records.push_back(std::move(rec));
    }

    std::ostringstream csv;
    csv << std::setprecision(17);
    write_csv_header(csv, opts.k);
    write_csv_row(csv, 0.0, g);
    t_prev = 0.0;
    for (const VelocityRecord& rec : records) {
      const double span = rec.t - t_prev;
      const auto steps = static_cast<long long>(std::ceil(span / opts.dt - 1e-9));
      const double h = span / static_cast<double>(std::max(1LL, steps));
      for (long long s = 0; s < std::max(1LL, steps); ++s) {
        g = propagate(g, rec.v, h);
        g = GroupElement(so3::renormalize(g.rotation()), g.translations());
      }
      write_csv_row(csv, rec.t, g);
      t_prev = rec.t;
    }

    if (opts.output.empty()) {
      out << csv.str();
    } else {
      std::ofstream file(opts.output);
      if (!file) throw ParseFailure{opts.output, 0, "cannot open output file"};
      file << csv.str();
    }
    return kOk;
  });
}

int cmd_register(const RegisterOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    if (opts.k < 1) throw Error(ErrorKind::InvalidArgument, "--k must be >= 1 for registration");
    if (opts.max_iters < 1) throw Error(ErrorKind::InvalidArgument, "--max-iters must be >= 1");
    if (!(opts.tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "--tol must be positive");

    std::vector<PointBlock> blocks;
    for (const JsonLine& line : read_json_lines(opts.points)) {
      blocks.push_back(at_line(opts.points, line.line, [&] {
        return PointBlock(read_vec3_list(line.value, "points", opts.k));
      }));
    }
    std::vector<Observation> obs;
    for (const JsonLine& line : read_json_lines(opts.observations)) {
      obs.push_back(at_line(opts.observations, line.line, [&] {
        const json& j = line.value;
        Observation o;
        const auto int_field = [&](const char* name) {
          const auto it = j.find(name);
          if (it == j.end() || !it->is_number_integer()) {
            throw Error(ErrorKind::InvalidArgument,
                        std::string("field '") + name + "' must be an integer");
          }
          return it->get<int>();
        };
        o.block = int_field("block");
        o.slot = int_field("slot");
        o.target = read_vec3(j, "target");
        if (j.contains("weight")) o.weight = read_number(j, "weight");
        if (o.block < 0 || o.block >= static_cast<int>(blocks.size())) {
          throw Error(ErrorKind::InvalidArgument, "block index out of range");
        }
        if (o.slot < 0 || o.slot >= opts.k) {
          throw Error(ErrorKind::DimensionMismatch, "slot index out of range for --k");
        }
        return o;
      }));
    }

    const GroupElement init = opts.initial ? read_element_file(*opts.initial, opts.k)
                                           : GroupElement::identity(opts.k);
    const FitResult fit = gauss_newton_fit(obs, blocks, init, {opts.max_iters, opts.tol});
    json result;
    result["estimate"] = to_json(fit.estimate);
    result["cost"] = fit.cost;
    result["iterations"] = fit.iterations;
    result["converged"] = fit.converged;
    out << result.dump() << "\n";
    return kOk;
  });
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.k < 0 || opts.trials < 1) {
    err << "usage: verify --k <int >= 0> --trials <int >= 1> [--seed <int>]\n";
    return kUsageOrParse;
  }
  const std::vector<IdentityResult> results = run_identity_suite(opts.k, opts.trials, opts.seed);
  int failures = 0;
  std::ostringstream line;
  line << std::setprecision(3);
  for (const IdentityResult& r : results) {
    line.str("");
    line << (r.pass ? "PASS " : "FAIL ") << r.name << "  max_residual=" << r.max_residual
         << " tol=" << r.tolerance << " trials=" << r.trials;
    out << line.str() << "\n";
    if (!r.pass) ++failures;
  }
  out << (failures == 0 ? "all " : "") << results.size() - static_cast<std::size_t>(failures)
      << "/" << results.size() << " identities passed at K=" << opts.k << "\n";
  return failures == 0 ? kOk : kVerifyFailed;
}

}  // namespace sek3::tools
