#include <e3a/harness.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

namespace fs = std::filesystem;
using namespace e3a;
using namespace e3a::harness;

namespace {

int cmd_run(const std::string& config_path, std::size_t jobs, bool resume) {
  const auto cfg = load_config(config_path);
  const auto records = run_campaign(cfg, {jobs, resume});
  std::cout << records.size() << " records in " << (fs::path(cfg.output_dir) / results_file).string() << '\n';
  return 0;
}

void print_friedman(const std::vector<CellSummary>& cells, bool hv) {
  std::set<std::string> algorithms;
  std::map<std::pair<std::string, std::size_t>, std::map<std::string, double>> table;
  for (const auto& c : cells) {
    algorithms.insert(c.algorithm);
    table[{c.problem, c.m}][c.algorithm] = hv ? c.hv.mean : c.igd.mean;
  }
  std::vector<std::vector<double>> scores;
  for (const auto& [key, row] : table) {
    if (row.size() != algorithms.size()) {
      continue;
    }
    std::vector<double> r;
    for (const auto& a : algorithms) {
      r.push_back(row.at(a));
    }
    scores.push_back(std::move(r));
  }
  if (algorithms.size() < 2 || scores.size() < 2) {
    return;
  }
  const auto f = friedman_test(scores, hv);
  std::cout << "\nFriedman (" << (hv ? "HV" : "IGD") << ", " << f.problems << " instances): chi2 = "
            << format_double(f.statistic) << ", df = " << f.algorithms - 1 << '\n';
  std::size_t j = 0;
  for (const auto& a : algorithms) {
    std::cout << "  " << std::left << std::setw(20) << a << " avg rank " << std::fixed << std::setprecision(3)
              << f.average_ranks[j++] << std::defaultfloat << '\n';
  }
}

int cmd_summarize(const std::string& input) {
  const fs::path dir(input);
  const auto records = read_results((dir / results_file).string());
  const auto cells = summarize(records);

  std::ofstream out(dir / summary_file);
  out << summary_header << '\n';
  for (const auto& c : cells) {
    out << to_csv_row(c) << '\n';
  }

  std::cout << std::left << std::setw(10) << "problem" << std::setw(4) << "m" << std::setw(18) << "algorithm"
            << std::setw(6) << "runs" << std::setw(26) << "IGD mean (std)" << "HV mean (std)\n";
  for (const auto& c : cells) {
    auto cell = [](const MeanStd& s) {
      std::ostringstream os;
      os << std::scientific << std::setprecision(3) << s.mean << " (" << s.std << ')' << (s.degenerate ? '*' : ' ');
      return os.str();
    };
    std::cout << std::setw(10) << c.problem << std::setw(4) << c.m << std::setw(18) << c.algorithm << std::setw(6)
              << c.igd.count << std::setw(26) << cell(c.igd) << cell(c.hv) << '\n';
  }
  if (std::ranges::any_of(cells, [](const CellSummary& c) { return c.igd.degenerate; })) {
    std::cout << "* single run, std undefined\n";
  }
  print_friedman(cells, false);
  print_friedman(cells, true);
  std::cout << "\nwrote " << (dir / summary_file).string() << '\n';
  return 0;
}

int cmd_fronts(const std::string& input, const std::string& cell, std::optional<std::size_t> m) {
  std::vector<std::string> parts;
  std::stringstream ss(cell);
  for (std::string tok; std::getline(ss, tok, ',');) {
    parts.push_back(tok);
  }
  if (parts.size() != 3) {
    throw Error(Errc::InvalidConfig, "--cell expects problem,algorithm,run");
  }
  const auto& problem = parts[0];
  const auto& algorithm = parts[1];
  const auto run = std::stoul(parts[2]);

  const fs::path dir = fs::path(input) / fronts_dir;
  std::vector<fs::path> matches;
  if (m) {
    const auto p = dir / front_file_name(problem, *m, algorithm, run);
    if (fs::exists(p)) {
      matches.push_back(p);
    }
  } else if (fs::is_directory(dir)) {
    const auto suffix = "_" + algorithm + "_run" + std::to_string(run) + ".txt";
    const std::regex pattern(problem + "_m[0-9]+");
    for (const auto& entry : fs::directory_iterator(dir)) {
      const auto name = entry.path().filename().string();
      if (name.size() > suffix.size() && name.ends_with(suffix) &&
          std::regex_match(name.substr(0, name.size() - suffix.size()), pattern)) {
        matches.push_back(entry.path());
      }
    }
  }
  if (matches.empty()) {
    throw Error(Errc::IoError, "no front dump for " + cell + " under " + dir.string());
  }
  if (matches.size() > 1) {
    std::ostringstream os;
    os << "cell " << cell << " is ambiguous, pass --m:";
    for (const auto& p : matches) {
      os << ' ' << p.filename().string();
    }
    throw Error(Errc::InvalidConfig, os.str());
  }
  const auto front = read_front_file(matches.front().string());
  write_front_stream(std::cout, front.points);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"E3A many-objective experiment runner"};
  app.require_subcommand(1);

  std::string config_path;
  std::size_t jobs = 1;
  bool resume = false;
  auto* run = app.add_subcommand("run", "execute a campaign");
  run->add_option("--config", config_path, "JSON campaign file")->required()->check(CLI::ExistingFile);
  run->add_option("--jobs", jobs, "concurrent cells")->check(CLI::PositiveNumber);
  run->add_flag("--resume", resume, "skip cells already in results.csv");

  std::string input;
  auto* summ = app.add_subcommand("summarize", "per-cell mean/std and Friedman ranks");
  summ->add_option("--input", input, "campaign output directory")->required()->check(CLI::ExistingDirectory);

  std::string cell;
  std::optional<std::size_t> m;
  auto* fronts = app.add_subcommand("fronts", "print one dumped final front");
  fronts->add_option("--input", input, "campaign output directory")->required()->check(CLI::ExistingDirectory);
  fronts->add_option("--cell", cell, "problem,algorithm,run")->required();
  fronts->add_option("--m", m, "objective count, when the problem ran at several");

  auto* defaults = app.add_subcommand("defaults", "print a config with every default filled in");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      return cmd_run(config_path, jobs, resume);
    }
    if (*summ) {
      return cmd_summarize(input);
    }
    if (*fronts) {
      return cmd_fronts(input, cell, m);
    }
    if (*defaults) {
      ExperimentConfig cfg;
      cfg.problems = {{"MaF1", 3, std::nullopt, std::nullopt}};
      std::cout << to_json(cfg).dump(2) << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
