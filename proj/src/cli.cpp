#include "jsup/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "jsup/canonical.hpp"
#include "jsup/error.hpp"
#include "jsup/function_file.hpp"
#include "jsup/minsupport.hpp"
#include "jsup/operators.hpp"
#include "jsup/spectral.hpp"

namespace jsup::cli {

using nlohmann::json;

namespace {

json big_json(const BigInteger& z) {
  if (z >= 0 && z.fits_ulong_p()) return json(static_cast<std::uint64_t>(z.get_ui()));
  return json(to_string(z));
}

std::string vertex_string(VertexSet x) {
  std::ostringstream out;
  out << '{';
  const auto elems = x.elements();
  for (std::size_t k = 0; k < elems.size(); ++k) out << (k ? "," : "") << elems[k];
  out << '}';
  return out.str();
}

void emit_function(const FunctionFile& file, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << serialize(file);
  } else {
    write_function_file(path, file);
  }
}

std::optional<int> carried_index(std::optional<int> index, const JohnsonParams& target) {
  if (!index || *index < 0 || *index > max_eigen_index(target)) return std::nullopt;
  return index;
}

json report_json(const SearchReport& r, bool timing) {
  json doc = json::object();
  doc["n"] = r.params.n;
  doc["w"] = r.params.w;
  doc["i"] = r.index;
  doc["lambda"] = r.lambda;
  doc["dimension"] = r.dimension;
  doc["min_support"] = r.min_support;
  doc["optimal"] = r.optimal;
  doc["bound"] = big_json(r.bound);
  doc["attained_by_canonical"] = r.attained_by_canonical;
  doc["all_witnesses_canonical"] = r.all_witnesses_canonical;
  doc["algorithm"] = r.algorithm;
  doc["hyperplane_status"] = r.hyperplane_status;
  doc["witness_total"] = r.witness_total;
  json witnesses = json::array();
  for (const auto& f : r.witnesses) {
    json item = json::object();
    item["support"] = f.support_size();
    item["entries"] = function_entries_json(f);
    if (auto m = match_canonical(f, r.index)) {
      item["canonical_pairing"] = m->pairing.to_string();
      item["canonical_scalar"] = to_string(m->scalar);
    } else {
      item["canonical_pairing"] = nullptr;
      item["canonical_scalar"] = nullptr;
    }
    witnesses.push_back(std::move(item));
  }
  doc["witnesses"] = std::move(witnesses);
  json stats = json::object();
  stats["nodes"] = r.stats.nodes;
  stats["subsets"] = r.stats.subsets;
  stats["hyperplanes"] = r.stats.hyperplanes;
  if (timing) stats["elapsed_seconds"] = r.stats.elapsed_seconds;
  doc["stats"] = std::move(stats);
  return doc;
}

void print_report(const SearchReport& r, std::ostream& out) {
  out << "J(" << r.params.n << "," << r.params.w << ") i=" << r.index << " lambda=" << r.lambda
      << " dimension=" << r.dimension << "\n";
  out << "min_support " << r.min_support << (r.optimal ? "" : " (not proven optimal: budget exhausted)") << "\n";
  out << "bound " << to_string(r.bound) << "\n";
  out << "attained_by_canonical " << (r.attained_by_canonical ? "true" : "false") << "\n";
  out << "all_witnesses_canonical " << (r.all_witnesses_canonical ? "true" : "false") << "\n";
  out << "algorithm " << r.algorithm << " (hyperplane: " << r.hyperplane_status << ")\n";
  out << "witnesses " << r.witness_total << " distinct, showing " << r.witnesses.size() << "\n";
  for (const auto& f : r.witnesses) {
    out << " ";
    for (const auto& [x, v] : f) out << " " << vertex_string(x) << ":" << to_string(v);
    if (auto m = match_canonical(f, r.index)) {
      out << "  [canonical pairs " << m->pairing.to_string() << " scalar " << to_string(m->scalar) << "]";
    }
    out << "\n";
  }
  out << "stats nodes=" << r.stats.nodes << " subsets=" << r.stats.subsets << " hyperplanes=" << r.stats.hyperplanes
      << " elapsed=" << std::fixed << std::setprecision(3) << r.stats.elapsed_seconds << "s\n";
  out.unsetf(std::ios::floatfield);
}

int exit_for(const SearchReport& r) { return r.optimal ? kSuccess : kBudgetExhausted; }

Algorithm parse_algorithm(const std::string& name) {
  if (name == "bnb") return Algorithm::bnb;
  if (name == "hyperplane") return Algorithm::hyperplane;
  return Algorithm::both;
}

struct TableRow {
  int n, w, i;
  std::int64_t lambda;
  std::string dim, bound, min_support, attained, status;
};

std::string csv_line(const TableRow& row) {
  std::ostringstream out;
  out << row.n << ',' << row.w << ',' << row.i << ',' << row.lambda << ',' << row.dim << ',' << row.bound << ','
      << row.min_support << ',' << row.attained << ',' << row.status;
  return out.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact eigenfunctions of Johnson graphs and their minimum supports", "jsup"};
  app.require_subcommand(1);
  unsigned threads = 0;
  const std::string threads_help = "Worker threads (0 = available parallelism)";

  int n = 0, w = 0, i = 0;
  bool as_json = false;

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Eigenvalues and multiplicities of J(n,w)");
  spectrum_cmd->add_option("--n", n)->required();
  spectrum_cmd->add_option("--w", w)->required();
  spectrum_cmd->add_flag("--json", as_json);

  std::string pairs_text, out_path, func_path;
  bool pairs_given = false;
  auto* canonical_cmd = app.add_subcommand("canonical", "Write the extremal function f^{i,w,n}");
  canonical_cmd->add_option("--n", n)->required();
  canonical_cmd->add_option("--w", w)->required();
  canonical_cmd->add_option("--i", i)->required();
  auto* pairs_opt = canonical_cmd->add_option("--pairs", pairs_text, "Pairs a:b,c:d,... (default 0:1,2:3,...)");
  canonical_cmd->add_option("--out", out_path, "Output file (default: stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Check the eigenfunction equation at lambda_i");
  verify_cmd->add_option("--func", func_path)->required();
  verify_cmd->add_option("--i", i)->required();
  verify_cmd->add_flag("--json", as_json);

  int target_w = 0;
  auto* induce_cmd = app.add_subcommand("induce", "Induce a function of J(n,i) up to J(n,w)");
  induce_cmd->add_option("--func", func_path)->required();
  induce_cmd->add_option("--target-w", target_w)->required();
  induce_cmd->add_option("--out", out_path)->required();

  int j1 = 0, j2 = 0;
  auto* reduce_cmd = app.add_subcommand("reduce", "Pair reduction f_{j1,j2} onto J(n-2,w-1)");
  reduce_cmd->add_option("--func", func_path)->required();
  reduce_cmd->add_option("--j1", j1)->required();
  reduce_cmd->add_option("--j2", j2)->required();
  reduce_cmd->add_option("--out", out_path)->required();

  auto* partition_cmd = app.add_subcommand("partition", "Coordinate partition by vanishing reductions");
  partition_cmd->add_option("--func", func_path)->required();
  partition_cmd->add_flag("--json", as_json);

  std::string algo = "both";
  SearchOptions options;
  std::size_t dense_budget = kDefaultDenseBudget;
  bool timing = false;
  auto* minsupport_cmd = app.add_subcommand("minsupport", "Exact minimum support of the lambda_i eigenspace");
  minsupport_cmd->add_option("--n", n)->required();
  minsupport_cmd->add_option("--w", w)->required();
  minsupport_cmd->add_option("--i", i)->required();
  minsupport_cmd->add_option("--algo", algo)->check(CLI::IsMember({"bnb", "hyperplane", "both"}));
  minsupport_cmd->add_option("--budget", options.node_budget, "Node budget of the branch-and-bound search");
  minsupport_cmd->add_option("--subset-budget", options.subset_budget, "Largest C(N,d-1) for hyperplane enumeration");
  minsupport_cmd->add_option("--witness-cap", options.witness_cap, "Witnesses to report");
  minsupport_cmd->add_option("--dense-budget", dense_budget, "Largest vertex count for eigenspace computation");
  minsupport_cmd->add_flag("--json", as_json);
  minsupport_cmd->add_flag("--timing", timing, "Include elapsed time in JSON output");
  minsupport_cmd->add_option("--threads", threads, threads_help);

  int max_n = 0, max_w = -1;
  std::string csv_path;
  std::uint64_t table_budget = 20'000'000;
  auto* table_cmd = app.add_subcommand("table", "Minimum support versus the bound for every small instance");
  table_cmd->add_option("--max-n", max_n)->required();
  table_cmd->add_option("--max-w", max_w);
  table_cmd->add_option("--csv", csv_path);
  table_cmd->add_option("--budget", table_budget, "Node budget per instance");
  table_cmd->add_option("--dense-budget", dense_budget);
  table_cmd->add_option("--threads", threads, threads_help);

  std::vector<const char*> argv{"jsup"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }
  options.threads = threads;
  pairs_given = pairs_opt->count() > 0;

  try {
    if (*spectrum_cmd) {
      const JohnsonParams params{n, w};
      const auto eigen = spectrum(params);
      if (as_json) {
        json rows = json::array();
        for (const auto& e : eigen) {
          rows.push_back({{"index", e.index}, {"lambda", e.lambda}, {"multiplicity", big_json(e.multiplicity)}});
        }
        out << json{{"n", n}, {"w", w}, {"spectrum", rows}}.dump(2) << "\n";
      } else {
        out << "i lambda multiplicity\n";
        for (const auto& e : eigen) out << e.index << " " << e.lambda << " " << to_string(e.multiplicity) << "\n";
      }
      return kSuccess;
    }

    if (*canonical_cmd) {
      const JohnsonParams params{n, w};
      const PairingConfig pairing = pairs_given ? parse_pairing(pairs_text) : default_pairing(i);
      const FunctionFile file{build_canonical(params, i, pairing), i};
      emit_function(file, out_path, out);
      return kSuccess;
    }

    if (*verify_cmd) {
      const FunctionFile file = read_function_file(func_path);
      const JohnsonParams& params = file.function.params();
      if (i < 0 || i > params.w) {
        throw Error(ErrorCode::out_of_range, "eigen index must lie in [0, w]");
      }
      const std::int64_t lambda = eigenvalue(params.n, params.w, i);
      const EigenVerdict verdict = is_eigenfunction(file.function, lambda);
      if (as_json) {
        json doc{{"holds", verdict.holds}, {"is_zero", verdict.is_zero}, {"lambda", lambda},
                 {"support", file.function.support_size()}};
        doc["certificate"] = verdict.certificate ? json(rank_subset(*verdict.certificate)) : json(nullptr);
        out << doc.dump(2) << "\n";
      } else {
        out << (verdict.holds ? "holds" : "fails") << " lambda=" << lambda
            << " support=" << file.function.support_size() << (verdict.is_zero ? " (zero function)" : "") << "\n";
        if (verdict.certificate) {
          out << "certificate rank=" << rank_subset(*verdict.certificate) << " vertex="
              << vertex_string(*verdict.certificate) << "\n";
        }
      }
      if (!verdict.holds) {
        err << "jsup: verify failed [reason=not-eigenfunction]\n";
        return kVerificationFailure;
      }
      return kSuccess;
    }

    if (*induce_cmd) {
      const FunctionFile in = read_function_file(func_path);
      SparseFunction g = induce(in.function, target_w);
      const JohnsonParams q = g.params();
      emit_function({std::move(g), carried_index(in.lambda_index, q)}, out_path, out);
      return kSuccess;
    }

    if (*reduce_cmd) {
      const FunctionFile in = read_function_file(func_path);
      SparseFunction g = reduce(in.function, j1, j2);
      const JohnsonParams q = g.params();
      std::optional<int> index;
      if (in.lambda_index && *in.lambda_index >= 1) index = carried_index(*in.lambda_index - 1, q);
      emit_function({std::move(g), index}, out_path, out);
      return kSuccess;
    }

    if (*partition_cmd) {
      const FunctionFile in = read_function_file(func_path);
      const PartitionResult part = coordinate_partition(in.function);
      if (as_json) {
        out << json{{"blocks", part.blocks}, {"t", part.t()}}.dump(2) << "\n";
      } else {
        out << "t=" << part.t() << "\n";
        for (const auto& block : part.blocks) {
          out << "{";
          for (std::size_t k = 0; k < block.size(); ++k) out << (k ? "," : "") << block[k];
          out << "}\n";
        }
      }
      return kSuccess;
    }

    if (*minsupport_cmd) {
      const SearchReport report = verify_bound({n, w}, i, options, parse_algorithm(algo), dense_budget);
      if (as_json) {
        out << report_json(report, timing).dump(2) << "\n";
      } else {
        print_report(report, out);
      }
      if (!report.optimal) err << "jsup: search budget exhausted [reason=budget-exhausted]\n";
      return exit_for(report);
    }

    if (*table_cmd) {
      std::vector<TableRow> rows;
      bool disagreement = false;
      bool exhausted = false;
      SearchOptions table_options = options;
      table_options.node_budget = table_budget;
      for (int tn = 2; tn <= max_n; ++tn) {
        const int wmax = max_w < 0 ? tn / 2 : std::min(max_w, tn / 2);
        for (int tw = 1; tw <= wmax; ++tw) {
          for (int ti = 1; ti <= tw; ++ti) {
            const JohnsonParams params{tn, tw};
            TableRow row{tn, tw, ti, eigenvalue(tn, tw, ti), "", to_string(support_size_bound(tn, tw, ti)), "", "", ""};
            row.dim = to_string(BigInteger(binomial(tn, ti) - binomial(tn, ti - 1)));
            if (params.vertex_count() > dense_budget) {
              row.min_support = "-";
              row.attained = "-";
              row.status = "skipped:size";
            } else {
              try {
                const SearchReport r = verify_bound(params, ti, table_options, Algorithm::both, dense_budget);
                row.min_support = r.optimal ? std::to_string(r.min_support) : "budget";
                row.attained = r.attained_by_canonical ? "true" : "false";
                if (!r.optimal) {
                  row.status = "budget";
                  exhausted = true;
                } else {
                  row.status = r.hyperplane_status == "agreed" ? "verified" : "bnb-only";
                }
              } catch (const Error& e) {
                if (e.code() != ErrorCode::oracle_disagreement) throw;
                row.min_support = "-";
                row.attained = "-";
                row.status = "disagree";
                disagreement = true;
                err << "jsup: J(" << tn << "," << tw << ") i=" << ti << ": " << e.what()
                    << " [reason=oracle-disagreement]\n";
              }
            }
            rows.push_back(row);
          }
        }
      }
      const std::string header = "n,w,i,lambda,dim,bound,min_support,attained_canonical,status";
      out << header << "\n";
      for (const auto& row : rows) out << csv_line(row) << "\n";
      if (!csv_path.empty()) {
        std::ofstream csv(csv_path, std::ios::binary);
        if (!csv) throw Error(ErrorCode::io_error, "cannot open '" + csv_path + "' for writing");
        csv << header << "\n";
        for (const auto& row : rows) csv << csv_line(row) << "\n";
      }
      if (disagreement) return kVerificationFailure;
      return exhausted ? kBudgetExhausted : kSuccess;
    }
  } catch (const Error& e) {
    err << "jsup: error [reason=" << reason(e.code()) << "] " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::oracle_disagreement: return kVerificationFailure;
      case ErrorCode::size_budget: return kBudgetExhausted;
      default: return kUsageError;
    }
  }
  return kUsageError;
}

}  // namespace jsup::cli
