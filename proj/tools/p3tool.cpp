#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "p3/commands.hpp"
#include "p3/errors.hpp"

namespace {

enum Exit { kOk = 0, kUsage = 1, kDisagreement = 2, kResource = 3 };

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw p3::InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  std::cout << text;
  if (out_path.empty()) return;
  std::ofstream out(out_path);
  if (!out) throw p3::InputError("cannot write '" + out_path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"P3-convexity and 2-neighbor bootstrap percolation toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::uint64_t seed = 1;
  p3::HarnessOptions harness;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "object"}))
      ->capture_default_str();
  app.add_option("--seed", seed, "Seed for every random choice")->capture_default_str();
  app.add_option("--max-oracle-n", harness.max_oracle_n,
                 "Largest vertex count handed to an exhaustive oracle")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();

  auto* analyze = app.add_subcommand("analyze", "Recognize a graph and evaluate closed forms");
  std::string input;
  bool oracle = false;
  analyze->add_option("file", input, "Graph document, '-' for stdin")->required();
  analyze->add_flag("--oracle", oracle, "Also run the exhaustive oracles");

  auto* generate = app.add_subcommand("generate", "Emit generated graph documents");
  std::string kind;
  int size = 0;
  int count = 10;
  generate->add_option("kind", kind, "Generator")
      ->required()
      ->check(CLI::IsMember({"caterpillar-exhaustive", "caterpillar-random", "uig-random",
                             "uig-2connected-random", "all-connected"}));
  generate->add_option("--size", size, "Spine length or vertex count")->required();
  generate->add_option("--count", count, "Number of random instances")->capture_default_str();

  auto* crossval = app.add_subcommand("crossval", "Check closed forms against the oracles");
  std::string suite = "all";
  int max_n = 10;
  int random_count = 300;
  std::string out_path;
  crossval->add_option("--suite", suite)
      ->check(CLI::IsMember({"caterpillar", "uig", "property-p", "all"}))
      ->capture_default_str();
  crossval->add_option("--max-n", max_n, "Largest instance")->capture_default_str();
  crossval->add_option("--count", random_count, "Random instances per suite")
      ->capture_default_str();
  crossval->add_option("--out", out_path, "Also write the report to this file");

  auto* propcheck = app.add_subcommand("propcheck", "Forbidden patterns vs direct property check");
  int prop_max_n = 6;
  int samples = 500;
  propcheck->add_option("--max-n", prop_max_n, "Largest vertex count (at most 9)")
      ->capture_default_str();
  propcheck->add_option("--samples", samples, "Random graphs per order above 7")
      ->capture_default_str();
  propcheck->add_option("--out", out_path, "Also write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const bool object = format == "object";
  try {
    if (*analyze) {
      const auto docs = p3::parse_documents(read_input(input));
      if (docs.empty()) throw p3::InputError("no graph document in input");
      p3::AnalyzeOptions opt{oracle, harness};
      int code = kOk;
      p3::Json all = p3::Json::array();
      std::string text;
      for (std::size_t i = 0; i < docs.size(); ++i) {
        auto res = p3::cmd_analyze(docs[i], opt);
        code = std::max(code, res.exit_code);
        if (i > 0) text += "---\n";
        text += p3::render_text(res.output);
        all.push_back(std::move(res.output));
      }
      if (object) std::cout << p3::Json{{"documents", all}}.dump(2) << '\n';
      else std::cout << text;
      return code;
    }
    if (*generate) {
      const auto docs = p3::cmd_generate(kind, size, seed, count);
      if (object)
        std::cout << p3::Json{{"kind", kind}, {"size", size}, {"seed", seed},
                              {"documents", p3::documents_to_json(docs)}}
                         .dump(2)
                  << '\n';
      else
        std::cout << p3::serialize_documents(docs);
      return kOk;
    }
    if (*crossval) {
      p3::CrossvalOptions opt{suite, max_n, seed, random_count, harness};
      const auto report = p3::cmd_crossval(opt);
      if (object) {
        auto j = p3::report_to_json(report);
        p3::Json head{{"suite", suite}, {"max_n", max_n}, {"seed", seed}};
        head.update(j);
        emit(head.dump(2) + "\n", out_path);
      } else {
        emit(p3::render_report_text(report), out_path);
      }
      return report.exit_code();
    }
    if (*propcheck) {
      const auto res = p3::cmd_propcheck(prop_max_n, seed, samples);
      emit(object ? res.output.dump(2) + "\n" : p3::render_propcheck_text(res.output), out_path);
      return res.exit_code;
    }
  } catch (const p3::ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
