// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: matroid_tor <command> [options].

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "matroid_tor.hpp"

namespace mt = matroid_tor;
using nlohmann::json;

namespace {

struct Source {
  std::vector<int> uniform;
  std::string bases;

  void attach(CLI::App* cmd) {
    auto* u = cmd->add_option("--uniform", uniform, "uniform matroid U_{r,n}")->expected(2);
    auto* b = cmd->add_option("--bases", bases, "matroid JSON file");
    u->excludes(b);
    b->excludes(u);
  }

  mt::Matroid load() const {
    if (!uniform.empty()) return mt::Matroid::uniform(uniform[0], uniform[1]);
    if (!bases.empty()) return mt::read_matroid_file(bases);
    throw mt::Error(mt::ErrorCode::InvalidParams, "give exactly one of --uniform r n or --bases FILE");
  }
  bool given() const { return !uniform.empty() || !bases.empty(); }
};

json sets_to_json(const std::vector<mt::ElemSet>& sets) {
  json out = json::array();
  for (mt::ElemSet s : sets) out.push_back(s.elements());
  return out;
}

mt::OrderFilter parse_filter(const std::string& text, const mt::Matroid& m) {
  if (text == "empty") return {};
  if (text == "full") return mt::full_filter(mt::flats(m));
  if (text.rfind("prefix:", 0) == 0) {
    const mt::FlipSequence seq = mt::flip_sequence(m);
    int k = -1;
    try {
      k = std::stoi(text.substr(7));
    } catch (const std::exception&) {
    }
    if (k < 0 || k > static_cast<int>(seq.centers.size()))
      throw mt::Error(mt::ErrorCode::InvalidParams,
                      "prefix length must lie in [0, " + std::to_string(seq.centers.size()) + "]");
    return seq.prefix(static_cast<std::size_t>(k));
  }
  throw mt::Error(mt::ErrorCode::InvalidParams, "filter must be empty, full or prefix:k");
}

void print_series(const mt::BivariatePoly& p, const std::string& format) {
  if (format == "json") {
    json j = mt::series_to_json(p);
    j["series"] = p.to_string();
    std::cout << j.dump() << '\n';
  } else {
    std::cout << p.to_string() << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tor of Stanley-Reisner rings of Bergman fans of matroids"};
  app.require_subcommand(1);
  app.fallthrough();
  int jobs = 0;
  std::string format = "text";
  app.add_option("--jobs", jobs, "worker threads (MATROID_TOR_JOBS overrides)");
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  Source src;

  auto* tutte_cmd = app.add_subcommand("tutte", "Tutte polynomial");
  src.attach(tutte_cmd);

  auto* nbc_cmd = app.add_subcommand("nbc", "no-broken-circuit bases");
  src.attach(nbc_cmd);

  auto* flats_cmd = app.add_subcommand("flats", "lattice of flats as JSON");
  src.attach(flats_cmd);

  auto* fan_cmd = app.add_subcommand("fan", "Bergman fan summary as JSON");
  src.attach(fan_cmd);
  std::string fan_filter = "full";
  int fan_dims = -1;
  fan_cmd->add_option("--filter", fan_filter, "empty, full or prefix:k");
  fan_cmd->add_option("--dims", fan_dims, "report graded dimensions up to this degree");

  auto* hilb_cmd = app.add_subcommand("hilb", "bigraded Hilbert series of Tor");
  src.attach(hilb_cmd);
  std::string ring = "smo", filter = "full", oracle;
  int t_max = -1, s_max = -1;
  hilb_cmd->add_option("--ring", ring, "sm or smo")->check(CLI::IsMember({"sm", "smo"}));
  hilb_cmd->add_option("--filter", filter, "empty, full or prefix:k");
  hilb_cmd->add_option("--t-max", t_max, "largest Tor degree");
  hilb_cmd->add_option("--s-max", s_max, "largest internal degree");
  hilb_cmd->add_option("--oracle", oracle, "squarefree or closed")
      ->check(CLI::IsMember({"squarefree", "closed"}));

  auto* uniform_cmd = app.add_subcommand("uniform-series", "closed form series of U_{r,r+k}");
  int ur = 0, uk = 0;
  uniform_cmd->add_option("r", ur, "rank")->required();
  uniform_cmd->add_option("k", uk, "corank")->required();

  auto* hochster_cmd = app.add_subcommand("hochster", "Betti numbers of C[NS(M)] via Hochster's formula");
  src.attach(hochster_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "run identity suites");
  src.attach(verify_cmd);
  std::string suite = "all";
  mt::VerifyOptions vopt;
  verify_cmd->add_option("--suite", suite, "suite name or all");
  verify_cmd->add_option("--max-n", vopt.max_n, "largest ground set in the corpus");
  verify_cmd->add_option("--random", vopt.random_count, "number of random corpus matroids");

  CLI11_PARSE(app, argc, argv);
  jobs = mt::resolve_jobs(jobs);

  try {
    if (*tutte_cmd) {
      const auto t = mt::tutte(src.load());
      if (format == "json")
        std::cout << json{{"tutte", t.to_string_descending()}}.dump() << '\n';
      else
        std::cout << t.to_string_descending() << '\n';
    } else if (*nbc_cmd) {
      const auto nbc = mt::nbc_bases(src.load());
      if (format == "json") {
        std::cout << json{{"count", nbc.size()}, {"nbc", sets_to_json(nbc)}}.dump() << '\n';
      } else {
        for (mt::ElemSet b : nbc) std::cout << b.to_string() << '\n';
      }
    } else if (*flats_cmd) {
      const mt::Matroid m = src.load();
      const mt::FlatLattice lat = mt::flats(m);
      json levels = json::array();
      for (int k = 0; k <= lat.rank(); ++k) levels.push_back(sets_to_json(lat.flats_of_rank(k)));
      std::cout << json{{"rank", lat.rank()}, {"count", lat.size()}, {"levels", levels}}.dump() << '\n';
    } else if (*fan_cmd) {
      const mt::Matroid m = src.load();
      const mt::BergmanFan fan(m, parse_filter(fan_filter, m));
      json rays = json::array();
      for (const mt::Ray& r : fan.rays()) rays.push_back(r.label());
      json out{{"rays", rays}, {"faces", fan.faces().size()}, {"dimension", fan.dimension()}};
      if (fan_dims >= 0) {
        json dims = json::array();
        for (int s = 0; s <= fan_dims; ++s) dims.push_back(mt::graded_dimension(fan, s));
        out["graded_dimensions"] = dims;
      }
      std::cout << out.dump() << '\n';
    } else if (*hilb_cmd) {
      const mt::Matroid m = src.load();
      const auto choice = ring == "sm" ? mt::RingChoice::OverSM : mt::RingChoice::OverSMcirc;
      if (choice == mt::RingChoice::OverSM && filter != "empty")
        throw mt::Error(mt::ErrorCode::InvalidParams, "the sm ring is only defined for --filter empty");
      mt::BivariatePoly series;
      if (!oracle.empty()) {
        m.require_loopless("hilb");
        const bool full = filter == "full";
        if (oracle == "squarefree" && filter == "empty" && choice == mt::RingChoice::OverSMcirc)
          series = mt::squarefree_tor_table(m, jobs);
        else if (oracle == "closed" && filter == "empty")
          series = choice == mt::RingChoice::OverSM ? mt::hilb_sm_empty(m) : mt::hilb_smo_empty(m);
        else if (oracle == "closed" && full && m.rank() == 2) {
          const mt::Matroid si = mt::simplification(m).matroid;
          series = mt::BivariatePoly::one_plus_x_pow(m.n() - si.n()) * mt::hilb_rank2(si);
        }
        else if (oracle == "closed" && full && m == mt::Matroid::uniform(m.rank(), m.n()))
          series = mt::hilb_uniform(m.rank(), m.n() - m.rank());
        else
          throw mt::Error(mt::ErrorCode::InvalidParams, "no " + oracle + " oracle for this ring and filter");
      } else {
        const mt::BergmanFan fan(m, parse_filter(filter, m));
        const int forms = choice == mt::RingChoice::OverSM ? m.n() : m.n() - 1;
        if (t_max >= 0 && t_max < forms)
          std::cerr << "warning: t-max " << t_max << " truncates Tor degrees up to " << forms << '\n';
        if (s_max >= 0 && s_max < m.rank() - 1)
          std::cerr << "warning: s-max " << s_max << " is below r-1 = " << m.rank() - 1 << '\n';
        series = mt::tor_table(fan, choice, {t_max, s_max}, jobs);
      }
      print_series(series, format);
    } else if (*uniform_cmd) {
      print_series(mt::hilb_uniform(ur, uk), format);
    } else if (*hochster_cmd) {
      const mt::Matroid m = src.load();
      const mt::HochsterTable table(m, jobs);
      if (format == "json") {
        json j = mt::series_to_json(table.series());
        j["series"] = table.series().to_string();
        j["ns_cohomology"] = mt::reduced_cohomology_dims(mt::non_spanning_complex(m));
        std::cout << j.dump() << '\n';
      } else {
        std::cout << table.series().to_string() << '\n';
      }
    } else if (*verify_cmd) {
      vopt.jobs = jobs;
      if (src.given()) vopt.only = src.load();
      std::vector<std::string> names = suite == "all" ? mt::suite_names() : std::vector<std::string>{suite};
      bool all_passed = true;
      for (const auto& name : names) {
        const mt::SuiteReport rep = mt::run_suite(name, vopt);
        all_passed = all_passed && rep.passed();
        std::cout << json{{"suite", rep.suite},
                          {"passed", rep.passed()},
                          {"checks", rep.checks},
                          {"failures", rep.failures}}
                         .dump()
                  << '\n';
      }
      return all_passed ? 0 : 1;
    }
  } catch (const mt::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
