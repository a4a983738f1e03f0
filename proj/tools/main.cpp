#include "bandsep/bounds.hpp"
#include "bandsep/error.hpp"
#include "bandsep/expansion.hpp"
#include "bandsep/generators.hpp"
#include "bandsep/io.hpp"
#include "bandsep/oracles.hpp"
#include "bandsep/ordering.hpp"
#include "bandsep/separators.hpp"
#include "bandsep/tree_decomposition.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

using namespace bandsep;

namespace {

enum Exit { kOk = 0, kCertificate = 1, kUsage = 2, kGuard = 3, kNoResult = 4 };

/// A heuristic finished without producing anything.
struct NoResult : Error {
  using Error::Error;
};

Graph load_graph(const std::string& path) { return parse_gr(read_file(path)); }

Rational parse_fraction(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const Error&) {
    throw PreconditionError(std::string("--") + what + ": expected p/q, got '" + text + "'");
  }
}

void emit(const std::string& path, const std::string& contents) {
  if (path.empty() || path == "-") {
    std::cout << contents;
  } else {
    write_file_atomic(path, contents);
  }
}

std::string vertices(const VertexSet& s) {
  std::string out;
  for (Vertex v : s) out += " " + std::to_string(v + 1);
  return out;
}

void print_separator(const Separator& sep) {
  std::cout << "size " << sep.s.size() << "\nsource " << source_name(sep.source) << "\nalpha " << to_string(sep.alpha)
            << "\nS" << vertices(sep.s) << "\nA" << vertices(sep.a) << "\nB" << vertices(sep.b) << '\n';
}

SeparatorProvider choose_provider(const std::string& name, const Graph& g) {
  if (name != "auto") {
    auto p = provider_from_name(name);
    if (!p) throw PreconditionError("unknown provider '" + name + "'");
    return *p;
  }
  if (g.num_edges() + connected_components(g).size() == static_cast<std::size_t>(g.num_vertices())) {
    return make_centroid_provider();
  }
  return g.num_vertices() <= 16 ? make_exact_provider() : make_bfs_provider();
}

std::string certificate_text(const OrderingCertificate& cert, const std::string& provider) {
  std::ostringstream out;
  out << "ordering\n  measured_bandwidth: " << cert.measured_bandwidth
      << "\n  fallback: " << (cert.fallback ? "true" : "false") << "\n  provider: " << provider
      << "\n  s_cap: " << cert.separator_budget << '\n';
  if (cert.beta) out << "  beta: " << *cert.beta << '\n';
  if (!cert.fallback) {
    const auto& part = *cert.partition;
    std::size_t p = 0;
    for (const auto& x : part.p) p += x.size();
    out << "  b: " << part.buckets() << "\n  S: " << part.s.size() << "\n  P: " << p << "\n  r: " << part.r_bound
        << "\n  guaranteed_bound: " << cert.guaranteed_bound << "\n  formula_bound: " << *cert.formula_bound << '\n';
    out << "separators\n";
    for (std::size_t i = 0; i < cert.separators.size(); ++i) {
      out << "  " << i + 1 << ":" << vertices(cert.separators[i].s) << '\n';
    }
    out << "separation_tree\n  leaves: " << cert.tree->leaf_count() << "\n  internal: " << cert.tree->internal_count()
        << '\n';
    out << "buckets\n ";
    for (int size : cert.buckets->sizes) out << ' ' << size;
    out << '\n';
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified bandwidth, separator and tree-decomposition toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph family instance");
  std::string family;
  GeneratorParams params;
  std::uint64_t seed = 0;
  std::string out_path;
  gen->add_option("family", family, "path|cycle|complete|star|grid|complete_binary_tree|random_bounded_degree|"
                                    "random_bipartite_bounded_degree|random_near_planar")
      ->required();
  gen->add_option("--n", params.n, "Vertex count");
  gen->add_option("--k", params.k, "Grid side or star leaves");
  gen->add_option("--depth", params.depth, "Binary tree depth");
  gen->add_option("--degree", params.degree, "Degree bound");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("-o,--output", out_path, "Output .gr (stdout if omitted)");

  // exact
  auto* exact = app.add_subcommand("exact", "Exact parameter by brute force");
  std::string param, graph_path, eps_text;
  std::optional<int> limit;
  exact->add_option("param", param, "bw|tw|sep|bdd")->required()->check(CLI::IsMember({"bw", "tw", "sep", "bdd"}));
  exact->add_option("-g,--graph", graph_path, "Input .gr")->required();
  exact->add_option("--eps", eps_text, "Expansion parameter p/q (bdd)");
  exact->add_option("--limit", limit, "Size guard");

  // separate
  auto* separate = app.add_subcommand("separate", "Find a balanced separator");
  std::string alpha_text = "2/3", method = "exact";
  separate->add_option("-g,--graph", graph_path, "Input .gr")->required();
  separate->add_option("--alpha", alpha_text, "Balance p/q");
  separate->add_option("--method", method, "exact|bfs|spectral|centroid|expansion")
      ->check(CLI::IsMember({"exact", "bfs", "spectral", "centroid", "expansion"}));
  separate->add_option("--eps", eps_text, "Expansion parameter p/q (expansion method)");

  // expansion
  auto* expansion = app.add_subcommand("expansion", "Search for a non-expanding set");
  std::string mode = "exact";
  expansion->add_option("-g,--graph", graph_path, "Input .gr")->required();
  expansion->add_option("--eps", eps_text, "Expansion parameter p/q")->required();
  expansion->add_option("--mode", mode, "exact|sweep")->check(CLI::IsMember({"exact", "sweep"}));

  // order
  auto* order = app.add_subcommand("order", "Separator-driven bandwidth ordering with certificate");
  std::optional<int> scap;
  std::string provider_name = "auto", cert_path;
  order->add_option("-g,--graph", graph_path, "Input .gr")->required();
  auto* scap_opt = order->add_option("--scap", scap, "Asserted separator budget");
  order->add_option("--provider", provider_name, "auto|exact|bfs|spectral|centroid");
  order->add_option("-o,--output", out_path, "Ordering output")->required();
  order->add_option("--cert", cert_path, "Certificate output")->required();
  scap_opt->check(CLI::PositiveNumber);

  // treedecomp
  auto* treedecomp = app.add_subcommand("treedecomp", "Tree decomposition by separator recursion");
  int base = 8;
  treedecomp->add_option("-g,--graph", graph_path, "Input .gr")->required();
  treedecomp->add_option("--eps", eps_text, "Expansion parameter p/q")->required();
  treedecomp->add_option("--base", base, "Leaf size threshold");
  treedecomp->add_option("-o,--output", out_path, "Output .td")->required();

  // report
  auto* report = app.add_subcommand("report", "Certified parameter report");
  bool full_exact = false;
  std::optional<double> genus, minor;
  report->add_option("-g,--graph", graph_path, "Input .gr")->required();
  report->add_flag("--full-exact", full_exact, "Raise exact guards to the oracle defaults");
  report->add_option("--genus", genus, "Genus for the genus bounds");
  report->add_option("--minor", minor, "Excluded minor order for the minor bounds");
  report->add_option("-o,--output", out_path, "Report output (stdout if omitted)");

  // selftest
  auto* selftest = app.add_subcommand("selftest", "Exact-oracle inequality sweep");
  SelftestConfig st;
  selftest->add_option("--n-min", st.n_min, "Smallest n");
  selftest->add_option("--n-max", st.n_max, "Largest n");
  selftest->add_option("--samples", st.samples, "Random graphs");
  selftest->add_option("--max-degree", st.max_degree, "Degree bound");
  selftest->add_option("--seed", st.seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) {
      const auto f = family_from_name(family);
      if (!f) throw PreconditionError("unknown family '" + family + "'");
      const auto g = generate(*f, params, seed);
      const auto text = write_gr(g);
      if (!(parse_gr(text) == g)) throw CertificateError("written graph does not re-parse");
      emit(out_path, text);
      if (!out_path.empty() && read_file(out_path) != text) throw CertificateError("file contents differ after write");
      return kOk;
    }

    if (*selftest) {
      const auto result = run_inequality_selftest(st);
      std::cout << "graphs " << result.graphs << '\n';
      for (const auto& line : result.lines) {
        std::cout << line.name << ": checks " << line.checks << ", violations " << line.violations << '\n';
      }
      return result.ok() ? kOk : kCertificate;
    }

    const auto g = load_graph(graph_path);

    if (*exact) {
      int value = 0;
      if (param == "bw") {
        auto r = exact_bandwidth(g, limit.value_or(12));
        if (bandwidth_of_labelling(g, r.witness) != r.value) throw CertificateError("bandwidth witness mismatch");
        value = r.value;
      } else if (param == "tw") {
        auto r = exact_treewidth(g, limit.value_or(12));
        if (g.num_vertices() > 0 && (!validate_tree_decomposition(g, r.witness) || r.witness.width() != r.value)) {
          throw CertificateError("treewidth witness invalid");
        }
        value = r.value;
      } else if (param == "sep") {
        value = exact_separation_number(g, limit.value_or(10));
      } else {
        if (eps_text.empty()) throw PreconditionError("exact bdd needs --eps p/q");
        value = exact_boundedness(g, parse_fraction(eps_text, "eps"), limit.value_or(14)).value;
      }
      std::cout << value << '\n';
      return kOk;
    }

    if (*separate) {
      const auto alpha = parse_fraction(alpha_text, "alpha");
      std::optional<Separator> sep;
      if (method == "exact") {
        sep = find_separator_exact(g, alpha);
      } else if (method == "expansion") {
        if (eps_text.empty()) throw PreconditionError("--method expansion needs --eps p/q");
        const auto eps = parse_fraction(eps_text, "eps");
        sep = separator_from_nonexpanding(g, eps, make_nonexpanding_finder(eps));
      } else {
        sep = provider_from_name(method)->find(g, alpha);
      }
      if (!sep) throw NoResult("method '" + method + "' found no separator");
      if (auto v = validate_separator(g, *sep); !v) throw CertificateError("separator invalid: " + v.reason);
      print_separator(*sep);
      return kOk;
    }

    if (*expansion) {
      const auto eps = parse_fraction(eps_text, "eps");
      const auto w = nonexpanding_set(g, eps, mode == "exact" ? SearchMode::kExact : SearchMode::kSweep);
      if (!w) throw NoResult("sweep found no qualifying prefix (this proves nothing)");
      std::cout << "kind " << witness_kind_name(w->kind) << "\neps " << to_string(eps) << '\n';
      if (w->kind == WitnessKind::kNonexpandingSet) {
        if (w->set.size() * 2 > static_cast<std::size_t>(g.num_vertices()) ||
            Rational(static_cast<std::int64_t>(outer_neighborhood(g, w->set).size())) >
                eps * static_cast<std::int64_t>(w->set.size())) {
          throw CertificateError("non-expanding witness fails its inequalities");
        }
        std::cout << "ratio " << to_string(w->ratio) << "\nW" << vertices(w->set) << "\nN" << vertices(w->neighborhood)
                  << '\n';
      }
      return kOk;
    }

    if (*order) {
      const auto provider = choose_provider(provider_name, g);
      const auto cert = scap ? recursive_band_ordering(g, provider, *scap) : recursive_band_ordering_adaptive(g, provider);
      const auto text = write_ordering(cert.labelling);
      if (bandwidth_of_labelling(g, parse_ordering(text, g.num_vertices())) != cert.measured_bandwidth) {
        throw CertificateError("ordering does not re-measure to the certified bandwidth");
      }
      emit(out_path, text);
      emit(cert_path, certificate_text(cert, provider.name));
      if (bandwidth_of_labelling(g, parse_ordering(read_file(out_path), g.num_vertices())) != cert.measured_bandwidth) {
        throw CertificateError("written ordering does not re-measure");
      }
      std::cout << "bandwidth " << cert.measured_bandwidth << (cert.fallback ? " (fallback)" : "") << '\n';
      return kOk;
    }

    if (*treedecomp) {
      const auto eps = parse_fraction(eps_text, "eps");
      const auto result = td_from_separators(g, eps, make_nonexpanding_finder(eps), base);
      const auto text = write_td(result.td, g.num_vertices());
      emit(out_path, text);
      const auto back = parse_td(read_file(out_path), g);
      if (auto v = validate_tree_decomposition(g, back); !v) throw CertificateError("written .td invalid: " + v.reason);
      std::cout << "width " << back.width() << "\nb_used " << result.b_used << '\n';
      return kOk;
    }

    if (*report) {
      ReportConfig config;
      config.full_exact = full_exact;
      config.genus = genus;
      config.minor_order = minor;
      const auto doc = build_report(g, config);
      emit(out_path, write_report(doc));
      for (const auto& v : doc.verdicts) {
        if (v.status == VerdictStatus::kFail) {
          std::cerr << "inequality failed: " << v.name << " " << v.detail << '\n';
          return kCertificate;
        }
      }
      return kOk;
    }
    return kUsage;
  } catch (const SizeGuardError& e) {
    std::cerr << "size guard: " << e.what() << '\n';
    return kGuard;
  } catch (const CertificateError& e) {
    std::cerr << "certificate failure: " << e.what() << '\n';
    return kCertificate;
  } catch (const NoResult& e) {
    std::cerr << "no result: " << e.what() << '\n';
    return kNoResult;
  } catch (const ProviderError& e) {
    std::cerr << "no result: " << e.what() << '\n';
    return kNoResult;
  } catch (const ExpanderEncountered& e) {
    std::cerr << "no result: " << e.what() << '\n';
    return kNoResult;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
