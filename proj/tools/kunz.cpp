// Command-line front end: census and stressed enumerations, convolution
// tables, weight sums, growth constants, the f-2m limit law, and ratio
// diagnostics, emitted as CSV or JSON.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kunz/analytics.hpp"
#include "kunz/census.hpp"
#include "kunz/ng_series.hpp"
#include "kunz/stressed.hpp"
#include "kunz/table.hpp"

namespace {

using kunz::Count;
using kunz::OutputTable;

struct OutputOptions {
  std::string format = "csv";
  std::string out_path;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", opts.out_path, "Write output to a file instead of stdout");
}

void emit(const std::vector<OutputTable>& tables, const OutputOptions& opts) {
  const std::string text = kunz::render_tables(tables, opts.format);
  if (opts.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file '" + opts.out_path + "'");
  out << text;
}

// --threads wins; otherwise KUNZ_THREADS; otherwise 1.
unsigned resolve_threads(const CLI::Option* flag, unsigned flag_value) {
  if (flag->count() > 0) return std::max(1u, flag_value);
  if (const char* env = std::getenv("KUNZ_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

std::vector<Count> stressed_by_genus(unsigned max_genus, unsigned threads) {
  kunz::StressedOptions opts;
  opts.threads = threads;
  return kunz::count_stressed(max_genus, std::nullopt, opts).by_genus;
}

void setup_census(CLI::App& app) {
  auto cmd = app.add_subcommand("census", "Exhaustive per-genus census of numerical semigroups");
  auto opts = std::make_shared<OutputOptions>();
  auto max_genus = std::make_shared<unsigned>(0);
  auto cap = std::make_shared<unsigned>(kunz::CensusOptions{}.genus_cap);
  auto fm2m = std::make_shared<bool>(false);
  auto threads = std::make_shared<unsigned>(1);
  cmd->add_option("--max-genus", *max_genus, "Largest genus to enumerate")->required();
  cmd->add_option("--cap", *cap, "Oracle genus cap")->capture_default_str();
  cmd->add_flag("--fm2m", *fm2m, "Also emit the f-2m histogram per genus");
  auto thread_opt = cmd->add_option("--threads", *threads, "Worker threads");
  add_output_options(cmd, *opts);

  cmd->callback([=]() {
    kunz::CensusOptions census_opts;
    if (*cap > kunz::CensusOptions{}.genus_cap)
      std::cerr << "warning: oracle cap raised to " << *cap
                << "; runtime grows exponentially with genus\n";
    census_opts.genus_cap = *cap;
    census_opts.threads = resolve_threads(thread_opt, *threads);
    const auto rows = kunz::census(*max_genus, census_opts);

    unsigned max_depth = 0;
    for (const auto& row : rows)
      if (!row.depth_histogram.empty())
        max_depth = std::max(max_depth, row.depth_histogram.rbegin()->first);

    OutputTable table;
    table.name = "census";
    table.columns = {"g", "n_g", "t_g", "s_g", "n_hat_g"};
    for (unsigned d = 0; d <= max_depth; ++d)
      table.columns.push_back("depth_" + std::to_string(d));
    for (const auto& row : rows) {
      std::vector<OutputTable::Cell> cells{
          Count(row.genus), row.total, row.shallow,
          row.genus >= 2 ? rows[row.genus].shallow - rows[row.genus - 1].shallow -
                               rows[row.genus - 2].shallow
                         : Count(0),
          row.deep};
      for (unsigned d = 0; d <= max_depth; ++d) {
        const auto it = row.depth_histogram.find(d);
        cells.push_back(it == row.depth_histogram.end() ? Count(0) : it->second);
      }
      table.rows.push_back(std::move(cells));
    }

    std::vector<OutputTable> tables{std::move(table)};
    if (*fm2m) {
      OutputTable hist;
      hist.name = "fm2m";
      hist.columns = {"g", "k", "count"};
      for (const auto& row : rows)
        for (const auto& [k, count] : row.f_minus_2m_histogram)
          hist.rows.push_back({Count(row.genus), std::int64_t(k), count});
      tables.push_back(std::move(hist));
    }
    emit(tables, *opts);
  });
}

void setup_stressed(CLI::App& app) {
  auto cmd = app.add_subcommand("stressed", "Count stressed words by genus");
  auto opts = std::make_shared<OutputOptions>();
  auto max_genus = std::make_shared<unsigned>(0);
  auto max_length = std::make_shared<unsigned>(0);
  auto by_length = std::make_shared<bool>(false);
  auto threads = std::make_shared<unsigned>(1);
  cmd->add_option("--max-genus", *max_genus, "Largest genus to count")->required();
  auto length_opt = cmd->add_option("--max-length", *max_length, "Cap the word length");
  cmd->add_flag("--by-length", *by_length, "Emit (length, genus, count) rows");
  auto thread_opt = cmd->add_option("--threads", *threads, "Worker threads");
  add_output_options(cmd, *opts);

  cmd->callback([=]() {
    kunz::StressedOptions stressed_opts;
    stressed_opts.threads = resolve_threads(thread_opt, *threads);
    std::optional<unsigned> cap;
    if (length_opt->count() > 0) cap = *max_length;
    const auto table = kunz::count_stressed(*max_genus, cap, stressed_opts);

    OutputTable out;
    if (*by_length) {
      out.name = "stressed_by_length";
      out.columns = {"l", "g", "count"};
      for (const auto& [key, count] : table.by_length_and_genus)
        out.rows.push_back({Count(key.first), Count(key.second), count});
    } else {
      out.name = "stressed";
      out.columns = {"g", "s_g"};
      for (unsigned g = 3; g <= *max_genus; ++g)
        out.rows.push_back({Count(g), table.by_genus[g]});
    }
    emit({out}, *opts);
  });
}

void setup_ttable(CLI::App& app) {
  auto cmd = app.add_subcommand("ttable", "Depth<=3 totals via the stressed convolution");
  auto opts = std::make_shared<OutputOptions>();
  auto max_genus = std::make_shared<unsigned>(0);
  auto ng_path = std::make_shared<std::string>();
  auto threads = std::make_shared<unsigned>(1);
  cmd->add_option("--max-genus", *max_genus, "Largest genus")->required();
  cmd->add_option("--ng-file", *ng_path, "Known totals n_g; adds the n_hat_g column");
  auto thread_opt = cmd->add_option("--threads", *threads, "Worker threads");
  add_output_options(cmd, *opts);

  cmd->callback([=]() {
    const auto stressed =
        stressed_by_genus(*max_genus, resolve_threads(thread_opt, *threads));
    const auto shallow = kunz::shallow_from_stressed(stressed, *max_genus);

    OutputTable out;
    out.name = "ttable";
    if (ng_path->empty()) {
      out.columns = {"g", "t_g"};
      for (unsigned g = 0; g <= *max_genus; ++g) out.rows.push_back({Count(g), shallow[g]});
    } else {
      const auto series = kunz::load_ng_series(*ng_path);
      if (series.max_genus() < *max_genus)
        throw std::invalid_argument("ng file stops at genus " +
                                    std::to_string(series.max_genus()) +
                                    " but --max-genus asks for " + std::to_string(*max_genus));
      const auto deep = kunz::deep_counts(series, shallow);
      out.columns = {"g", "t_g", "n_hat_g"};
      for (unsigned g = 0; g <= *max_genus; ++g)
        out.rows.push_back({Count(g), shallow[g], deep[g]});
    }
    emit({out}, *opts);
  });
}

void setup_weights(CLI::App& app) {
  auto cmd = app.add_subcommand("weights", "Partial sums of the stressed weight series");
  auto opts = std::make_shared<OutputOptions>();
  auto max_length = std::make_shared<unsigned>(0);
  auto threads = std::make_shared<unsigned>(1);
  cmd->add_option("--max-length", *max_length, "Largest stressed-word length to include")
      ->required();
  auto thread_opt = cmd->add_option("--threads", *threads, "Worker threads");
  add_output_options(cmd, *opts);

  cmd->callback([=]() {
    kunz::StressedOptions stressed_opts;
    stressed_opts.threads = resolve_threads(thread_opt, *threads);
    const auto table = kunz::count_stressed(3 * *max_length, *max_length, stressed_opts);
    const auto partial = kunz::weight_partial_sums(*max_length, table.by_length_and_genus);

    OutputTable out;
    out.name = "weights";
    out.columns = {"l", "partial_sum", "s_lower_bound"};
    for (const auto& [length, sum] : partial)
      out.rows.push_back({Count(length), sum, kunz::s_constant_bound(sum)});
    emit({out}, *opts);
  });
}

void setup_constants(CLI::App& app) {
  auto cmd = app.add_subcommand("constants", "Growth-rate constants from their polynomials");
  auto opts = std::make_shared<OutputOptions>();
  auto tolerance = std::make_shared<double>(1e-6);
  cmd->add_option("--tolerance", *tolerance, "Agreement tolerance between polynomial forms")
      ->capture_default_str();
  add_output_options(cmd, *opts);

  cmd->callback([=]() {
    const auto constants = kunz::solve_constants(*tolerance);
    OutputTable out;
    out.name = "constants";
    out.columns = {"constant", "value"};
    out.rows.push_back({std::string("lower_rate"), constants.lower_rate});
    out.rows.push_back({std::string("upper_rate"), constants.upper_rate});
    out.rows.push_back({std::string("golden_ratio"), constants.golden});
    out.rows.push_back({std::string("ratio_reference"), constants.ratio_reference});
    emit({out}, *opts);
  });
}

void setup_fm2m(CLI::App& app) {
  auto cmd = app.add_subcommand("fm2m", "Limiting distribution of f - 2m");
  auto opts = std::make_shared<OutputOptions>();
  auto k_min = std::make_shared<int>(-10);
  auto k_max = std::make_shared<int>(10);
  auto max_length = std::make_shared<unsigned>(20);
  auto s_estimate = std::make_shared<double>(0.0);
  cmd->add_option("--k-min", *k_min, "Smallest k")->capture_default_str();
  cmd->add_option("--k-max", *k_max, "Largest k")->capture_default_str();
  cmd->add_option("--max-length", *max_length, "Stressed-word length coverage")
      ->capture_default_str();
  auto s_opt = cmd->add_option("--s-estimate", *s_estimate,
                               "Use this constant estimate instead of the truncation bound");
  auto threads = std::make_shared<unsigned>(1);
  auto thread_opt = cmd->add_option("--threads", *threads, "Worker threads");
  add_output_options(cmd, *opts);

  cmd->callback([=]() {
    if (*k_min > *k_max)
      throw CLI::ValidationError("fm2m", "--k-min must not exceed --k-max");
    if (*k_max > 0 && *max_length < static_cast<unsigned>(*k_max))
      throw CLI::ValidationError("fm2m", "--max-length must cover --k-max");

    kunz::StressedOptions stressed_opts;
    stressed_opts.threads = resolve_threads(thread_opt, *threads);
    const auto table = kunz::count_stressed(3 * *max_length, *max_length, stressed_opts);

    double estimate;
    std::string note;
    if (s_opt->count() > 0) {
      estimate = *s_estimate;
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.6f", estimate);
      note = "approximate, S = " + std::string(buf) + " (supplied)";
    } else {
      const auto partial = kunz::weight_partial_sums(*max_length, table.by_length_and_genus);
      estimate = kunz::s_constant_bound(partial.at(*max_length));
      note = "approximate, S truncated at l = " + std::to_string(*max_length);
    }

    OutputTable out;
    out.name = "fm2m";
    out.columns = {"k", "limit_probability", "note"};
    for (int k = *k_min; k <= *k_max; ++k)
      out.rows.push_back({std::int64_t(k),
                          kunz::fm2m_limit(k, table.by_length_and_genus, estimate), note});
    emit({out}, *opts);
  });
}

void setup_ratios(CLI::App& app) {
  auto cmd = app.add_subcommand("ratios", "Growth-ratio diagnostics for plotting");
  auto opts = std::make_shared<OutputOptions>();
  auto max_genus = std::make_shared<unsigned>(0);
  auto ng_path = std::make_shared<std::string>();
  auto threads = std::make_shared<unsigned>(1);
  cmd->add_option("--ng-file", *ng_path, "Known totals n_g")->required();
  cmd->add_option("--max-genus", *max_genus, "Largest genus")->required();
  auto thread_opt = cmd->add_option("--threads", *threads, "Worker threads");
  add_output_options(cmd, *opts);

  cmd->callback([=]() {
    const auto series = kunz::load_ng_series(*ng_path);
    if (series.max_genus() < *max_genus)
      throw std::invalid_argument("ng file stops at genus " + std::to_string(series.max_genus()) +
                                  " but --max-genus asks for " + std::to_string(*max_genus));
    const auto stressed =
        stressed_by_genus(*max_genus, resolve_threads(thread_opt, *threads));
    const auto shallow = kunz::shallow_from_stressed(stressed, *max_genus);
    const auto deep = kunz::deep_counts(series, shallow);
    const auto rows = kunz::ratio_diagnostics(stressed, deep);
    const double reference = kunz::solve_constants(1e-9).ratio_reference;

    OutputTable out;
    out.name = "ratios";
    out.columns = {"g", "inv_g", "nhat_ratio", "s_ratio", "nhat_over_s", "reference"};
    for (const auto& row : rows) {
      std::vector<OutputTable::Cell> cells;
      cells.push_back(Count(row.genus));
      cells.push_back(1.0 / double(row.genus));
      cells.push_back(row.deep_ratio ? OutputTable::Cell(*row.deep_ratio)
                                     : OutputTable::Cell(std::monostate{}));
      cells.push_back(row.stressed_ratio ? OutputTable::Cell(*row.stressed_ratio)
                                         : OutputTable::Cell(std::monostate{}));
      cells.push_back(row.deep_over_stressed ? OutputTable::Cell(*row.deep_over_stressed)
                                             : OutputTable::Cell(std::monostate{}));
      cells.push_back(reference);
      out.rows.push_back(std::move(cells));
    }
    emit({out}, *opts);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counting of numerical semigroups via Kunz words"};
  app.require_subcommand(1);

  setup_census(app);
  setup_stressed(app);
  setup_ttable(app);
  setup_weights(app);
  setup_constants(app);
  setup_fm2m(app);
  setup_ratios(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
