#include "steiner/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "steiner/report_json.hpp"

namespace steiner::cli {

namespace {

double parse_number(std::string_view s) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(value)) {
    throw UsageError(fmt::format("malformed coordinate '{}'", s));
  }
  return value;
}

std::string plain(Complex z) {
  return fmt::format("{}{}{}i", z.real(), z.imag() < 0.0 ? "" : "+", z.imag());
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error(fmt::format("cannot open '{}' for writing", path.string()));
  f << content;
  f.close();
  if (!f) throw std::runtime_error(fmt::format("failed writing '{}'", path.string()));
}

void print_ellipse(std::ostream& out, const char* name, const SteinerEllipse& e) {
  const auto& g = e.geometry;
  out << "Steiner " << name << "-ellipse\n";
  const auto c = e.conic.as_array();
  const char* labels = "ABCDEF";
  for (std::size_t k = 0; k < 6; ++k) {
    out << '\t' << labels[k] << " = " << format_fixed2(c[k]) << '\n';
  }
  out << "\tFoci zF1: " << format_complex2(g.f1) << '\n';
  out << "\t     zF2: " << format_complex2(g.f2) << '\n';
  out << "\tSemi-major axis a: " << format_fixed2(g.a) << '\n';
  out << "\tSemi-minor axis b: " << format_fixed2(g.b) << '\n';
  out << "\tEccentricity: " << format_fixed2(g.ecc) << '\n';
}

void print_report(std::ostream& out, const SteinerReport& r, EllipseSelection which) {
  if (which != EllipseSelection::Circum) print_ellipse(out, "in", r.in);
  if (which != EllipseSelection::In) print_ellipse(out, "circum", r.circum);
}

std::string failure_message(const TriangleInput& t, const BatchFailure& f) {
  return f.kind == ErrorKind::Collinear ? collinear_message(t) : f.message;
}

}  // namespace

TriangleInput parse_triangle(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.size() != 3) {
    throw UsageError(fmt::format("--triangle expects three x,y pairs, got {}", tokens.size()));
  }
  TriangleInput t;
  for (std::size_t k = 0; k < 3; ++k) {
    const std::string& tok = tokens[k];
    const auto comma = tok.find(',');
    if (comma == std::string::npos || tok.find(',', comma + 1) != std::string::npos) {
      throw UsageError(fmt::format("malformed coordinate pair '{}'", tok));
    }
    t[k] = {parse_number(std::string_view(tok).substr(0, comma)),
            parse_number(std::string_view(tok).substr(comma + 1))};
  }
  return t;
}

RunConfig parse_args(int argc, const char* const* argv) {
  CLI::App app{"Steiner in- and circum-ellipse of a triangle"};
  std::string triangle_text;
  std::string input_file;
  std::string ellipse = "both";
  std::string svg;
  std::string json_out;
  bool quiet = false;
  auto* tri = app.add_option("--triangle", triangle_text, R"(three vertices, "x1,y1 x2,y2 x3,y3")");
  auto* inp = app.add_option("--input", input_file,
                             R"(JSON file: {"z1":[re,im],"z2":[re,im],"z3":[re,im]} or a list of them)");
  tri->excludes(inp);
  app.add_option("--ellipse", ellipse, "which ellipse to draw and print")
      ->check(CLI::IsMember({"in", "circum", "both"}));
  app.add_option("--svg", svg, "SVG output file (directory in batch mode)");
  app.add_option("--json", json_out, "JSON report output file");
  app.add_flag("--quiet", quiet, "suppress the console report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  RunConfig config;
  if (!triangle_text.empty()) {
    config.triangles.push_back(parse_triangle(triangle_text));
  } else if (!input_file.empty()) {
    std::ifstream f(input_file);
    if (!f) throw UsageError(fmt::format("cannot read '{}'", input_file));
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(f);
      if (doc.is_array()) {
        config.batch = true;
        for (const auto& entry : doc) config.triangles.push_back(triangle_from_json(entry));
      } else {
        config.triangles.push_back(triangle_from_json(doc));
      }
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(fmt::format("'{}': {}", input_file, e.what()));
    } catch (const std::invalid_argument& e) {
      throw UsageError(fmt::format("'{}': {}", input_file, e.what()));
    }
    for (const auto& t : config.triangles) {
      for (const Complex& z : t) {
        if (!is_finite(z)) throw UsageError("non-finite coordinate in input");
      }
    }
  } else {
    throw UsageError("missing triangle: give --triangle or --input");
  }

  config.which = ellipse == "in"       ? EllipseSelection::In
                 : ellipse == "circum" ? EllipseSelection::Circum
                                       : EllipseSelection::Both;
  if (!svg.empty()) config.svg_path = svg;
  if (!json_out.empty()) config.json_path = json_out;
  config.quiet = quiet;
  return config;
}

std::string collinear_message(const TriangleInput& t) {
  return fmt::format("z1={}, z2={}, z3={} are collinear!", plain(t[0]), plain(t[1]), plain(t[2]));
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const std::vector<BatchResult> results = evaluate_batch_parallel(config.triangles);

  bool geometry_failed = false;
  bool io_failed = false;
  nlohmann::json batch_json = nlohmann::json::array();

  if (config.batch && config.svg_path) {
    std::error_code ec;
    std::filesystem::create_directories(*config.svg_path, ec);
    if (ec) {
      err << "cannot create directory '" << config.svg_path->string() << "': " << ec.message()
          << '\n';
      return kIoFailure;
    }
  }

  for (std::size_t i = 0; i < results.size(); ++i) {
    const TriangleInput& input = config.triangles[i];
    if (const auto* failure = std::get_if<BatchFailure>(&results[i])) {
      geometry_failed = true;
      err << (config.batch ? fmt::format("[{}] ", i) : "") << failure_message(input, *failure)
          << '\n';
      batch_json.push_back(failure_to_json(input, BatchFailure{failure->kind,
                                                                failure_message(input, *failure)}));
      continue;
    }
    const auto& report = std::get<SteinerReport>(results[i]);
    batch_json.push_back(report_to_json(report));

    if (!config.quiet) {
      if (config.batch) out << "Triangle " << i << '\n';
      print_report(out, report, config.which);
    }
    if (config.svg_path) {
      const std::filesystem::path path =
          config.batch ? *config.svg_path / fmt::format("triangle-{:03d}.svg", i) : *config.svg_path;
      try {
        write_file(path, render(build_scene(report, config.which)));
      } catch (const std::exception& e) {
        err << e.what() << '\n';
        io_failed = true;
      }
    }
  }

  if (config.json_path) {
    const bool have_output = config.batch || !geometry_failed;
    if (have_output) {
      const nlohmann::json& doc = config.batch ? batch_json : batch_json.at(0);
      try {
        write_file(*config.json_path, doc.dump(2) + "\n");
      } catch (const std::exception& e) {
        err << e.what() << '\n';
        io_failed = true;
      }
    }
  }

  if (io_failed) return kIoFailure;
  if (geometry_failed) return kCollinear;
  return kSuccess;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(argc, argv);
  } catch (const HelpRequested& h) {
    out << h.what();
    return kSuccess;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  return run(config, out, err);
}

}  // namespace steiner::cli
