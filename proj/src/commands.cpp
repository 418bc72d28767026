#include "leibalg/commands.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <ios>
#include <stdexcept>
#include <type_traits>

#include "leibalg/catalog.hpp"
#include "leibalg/homology.hpp"

namespace leibalg {

namespace {

const std::string catalog_prefix = "catalog:";

template <class F>
auto with_pair(const AnyAlgebra& a, const AnyAlgebra& b, F&& f) {
  if (a.index() != b.index() || field_of(a) != field_of(b))
    throw Error(ErrorKind::field, "inputs are over different fields (" + field_of(a).to_string() + " and " +
                                      field_of(b).to_string() + ")");
  if (a.index() == 0) return f(std::get<0>(a), std::get<0>(b));
  return f(std::get<1>(a), std::get<1>(b));
}

Json sequence_json(const SequenceReport& r) {
  Json junctions = Json::array();
  for (const auto& j : r.junctions)
    junctions.push_back(Json{{"space", j.space},
                             {"dim", j.space_dim},
                             {"incoming_image_dim", j.image_dim},
                             {"outgoing_kernel_dim", j.kernel_dim},
                             {"exact", j.exact}});
  return Json{{"exact", r.exact()}, {"junctions", junctions}};
}

Json invariants_json(const IsoclinismInvariants& inv) {
  return Json{{"base_dim", inv.base_dim},
              {"commutator_dim", inv.commutator_dim},
              {"annihilator_dim", inv.annihilator_dim},
              {"base_commutator_dim", inv.base_commutator_dim},
              {"base_center_dim", inv.base_center_dim},
              {"kernel_commutator_dim", inv.kernel_commutator_dim},
              {"commutator_rank", inv.commutator_rank},
              {"total_dim", inv.total_dim},
              {"kernel_dim", inv.kernel_dim},
              {"lie_center_dim", inv.lie_center_dim}};
}

template <class S>
Json extension_json(const CentralExtension<S>& e) {
  Json out;
  out["kernel_dim"] = e.n().dim();
  out["total_dim"] = e.g().dim();
  out["base_dim"] = e.q().dim();
  out["kernel_image"] = subspace_json(e.kernel_image(), e.g());
  out["base_basis"] = e.q().names();
  const auto v = validate_extension(e);
  out["valid"] = v.ok();
  if (!v.ok()) out["failure"] = v.failure();
  out["sequence_tail"] = sequence_json(check_sequence_tail(e));
  out["sequence_nine"] = sequence_json(check_sequence_nine(e));
  const auto stem = is_stem_cover_candidate(e);
  out["theta_image_dim"] = stem.theta_image_dim;
  out["stem"] = Json{{"status", to_string(stem.status)},
                     {"kernel_dim", stem.kernel_dim},
                     {"theta_image_dim", stem.theta_image_dim},
                     {"theta_surjective", stem.theta_surjective},
                     {"theta_injective", "unknown"}};
  out["isoclinism_invariants"] = invariants_json(isoclinism_invariants(e));
  out["total_algebra"] = serialize(e.g());
  out["base_algebra"] = serialize(e.q());
  return out;
}

template <class S>
Json algebra_invariants_json(const LeibnizAlgebra<S>& g) {
  const auto center = lie_center(g);
  const auto comm = lie_commutator(g);
  const auto ann = annihilator_ideal(g);
  Json out;
  out["field"] = field_json(g.field());
  out["dim"] = g.dim();
  out["basis"] = g.names();
  out["lie_center"] = subspace_json(center, g);
  out["lie_commutator"] = subspace_json(comm, g);
  out["annihilator"] = subspace_json(ann, g);
  out["liezation_dim"] = g.dim() - ann.dim();
  out["abelian"] = is_abelian(g);
  out["trivial_lie_commutator"] = comm.is_zero_space();
  out["canonical_extension"] = extension_json(canonical_extension(g));
  return out;
}

template <class S>
Json witness_json(const CentralExtension<S>& e1, const CentralExtension<S>& e2, const IsoclinismWitness<S>& w) {
  const Field& f = e1.field();
  Json eta_images = Json::array(), xi_images = Json::array();
  for (Index k = 0; k < w.eta.coordinates().cols(); ++k)
    eta_images.push_back(format_vector(Vector<S>(w.eta.coordinates().col(k)), e2.q().names(), f));
  for (Index k = 0; k < w.xi.domain().dim(); ++k) xi_images.push_back(format_vector(w.xi(w.xi.domain().basis_vector(k)), e2.g().names(), f));
  return Json{{"eta", matrix_json(w.eta.coordinates(), f)},
              {"xi", matrix_json(w.xi.coordinates(), f)},
              {"first_base_basis", e1.q().names()},
              {"second_base_basis", e2.q().names()},
              {"eta_images", eta_images},
              {"first_commutator", subspace_json(w.xi.domain(), e1.g())},
              {"second_commutator", subspace_json(w.xi.codomain(), e2.g())},
              {"xi_images", xi_images}};
}

template <class S>
Json witness_check_json(const WitnessReport<S>& r) {
  Json out{{"ok", r.ok()},
           {"shapes_ok", r.shapes_ok},
           {"eta_bijective", r.eta_bijective},
           {"eta_bracket_preserving", r.eta_bracket_preserving},
           {"xi_injective", r.xi_injective},
           {"xi_surjective", r.xi_surjective},
           {"diagram_commutes", r.diagram_commutes},
           {"surjectivity_automatic", r.surjectivity_automatic()}};
  out["failing_pair"] = r.failing_pair ? Json::array({r.failing_pair->first, r.failing_pair->second}) : Json(nullptr);
  return out;
}

Json stats_json(const SearchStats& s) {
  return Json{{"nodes", s.nodes},
              {"complete", s.complete},
              {"bracket_rejected", s.bracket_rejected},
              {"xi_rejected", s.xi_rejected},
              {"witnesses_seen", s.witnesses},
              {"invariant_mismatch", s.invariant_mismatch}};
}

/// Accepts either a bare {eta, xi} object or a whole isoclinic report.
template <class S>
IsoclinismWitness<S> parse_witness(const Json& doc, const CentralExtension<S>& e1, const CentralExtension<S>& e2) {
  const Json* w = &doc;
  if (doc.is_object() && doc.contains("result") && doc["result"].contains("witness")) w = &doc["result"]["witness"];
  if (!w->is_object() || !w->contains("eta") || !w->contains("xi"))
    throw Error(ErrorKind::schema, "witness document needs \"eta\" and \"xi\" rows");
  const auto comm1 = lie_commutator(e1.g()), comm2 = lie_commutator(e2.g());
  const Field& f = e1.field();
  const Index d1 = e1.q().dim(), d2 = e2.q().dim();
  auto eta = parse_matrix<S>((*w)["eta"], f, d2, d1, "eta");
  auto xi = parse_matrix<S>((*w)["xi"], f, comm2.dim(), comm1.dim(), "xi");
  return {LinearMap<S>(Subspace<S>::whole(d1), Subspace<S>::whole(d2), std::move(eta)), LinearMap<S>(comm1, comm2, std::move(xi))};
}

/// A supplied witness must check; otherwise the first searched one.
template <class S>
struct Obtained {
  std::optional<IsoclinismWitness<S>> witness;
  int exit = exit_code::ok;
  std::string status = "ok";
  Json detail = Json::object();
};

template <class S>
Obtained<S> obtain_witness(const CentralExtension<S>& e1, const CentralExtension<S>& e2,
                           const std::optional<std::string>& witness_path, const CommandOptions& opts, Report& report) {
  Obtained<S> out;
  if (witness_path) {
    const Json doc = read_json_file(*witness_path);
    report.inputs.push_back({*witness_path, sha256_hex(doc.dump())});
    auto w = parse_witness(doc, e1, e2);
    const auto check = check_witness(e1, e2, w);
    out.detail["check"] = witness_check_json(check);
    if (check.ok()) {
      out.witness = std::move(w);
    } else {
      out.exit = exit_code::witness_failed;
      out.status = "witness_failed";
    }
    return out;
  }
  if constexpr (std::is_same_v<S, Fp>) {
    const auto r = search_isoclinism(e1, e2, opts.search);
    out.detail["search"] = stats_json(r.stats);
    if (r.witness) {
      out.witness = *r.witness;
    } else {
      out.exit = exit_code::none_found;
      out.status = "none_found";
    }
  } else {
    throw Error(ErrorKind::search, "isoclinism search over the rationals is not supported (GL is infinite); supply --witness");
  }
  return out;
}

template <class S>
CommandOutcome isoclinic_impl(const LeibnizAlgebra<S>& a, const LeibnizAlgebra<S>& b,
                              const std::optional<std::string>& witness_path, const CommandOptions& opts, Report report) {
  const auto e1 = canonical_extension(a), e2 = canonical_extension(b);
  auto got = obtain_witness(e1, e2, witness_path, opts, report);
  report.result["first_invariants"] = invariants_json(isoclinism_invariants(e1));
  report.result["second_invariants"] = invariants_json(isoclinism_invariants(e2));
  for (auto& [k, v] : got.detail.items()) report.result[k] = v;
  if (witness_path) {
    // Show the supplied matrices even when they fail to check.
    report.result["witness"] = witness_json(e1, e2, parse_witness(read_json_file(*witness_path), e1, e2));
  } else if (got.witness) {
    report.result["witness"] = witness_json(e1, e2, *got.witness);
  }
  report.result["isoclinic"] = got.witness.has_value();
  report.status = got.status;
  return {std::move(report), got.exit};
}

template <class S>
Subspace<S> graph_of(const LinearMap<S>& xi, Index first_dim, Index second_dim) {
  std::vector<Vector<S>> graph;
  for (Index k = 0; k < xi.domain().dim(); ++k) {
    Vector<S> v(first_dim + second_dim);
    v << xi.domain().basis_vector(k), xi(xi.domain().basis_vector(k));
    graph.push_back(v);
  }
  return Subspace<S>::span(first_dim + second_dim, graph);
}

template <class S>
CommandOutcome extension_pair_impl(const std::string& kind, const LeibnizAlgebra<S>& a, const LeibnizAlgebra<S>& b,
                                   const std::optional<std::string>& witness_path, const CommandOptions& opts, Report report) {
  const auto e1 = canonical_extension(a), e2 = canonical_extension(b);
  auto got = obtain_witness(e1, e2, witness_path, opts, report);
  for (auto& [k, v] : got.detail.items()) report.result[k] = v;
  report.status = got.status;
  if (!got.witness) return {std::move(report), got.exit};
  const auto& w = *got.witness;
  report.result["witness"] = witness_json(e1, e2, w);
  const AlgebraMorphism<S> eta(e1.q(), e2.q(), w.eta.coordinates());
  if (kind == "backward") {
    const auto back = backward_extension(e2, eta);
    report.result["extension"] = extension_json(back.extension);
    report.result["isomorphic_to_second"] = is_extension_isomorphism(back.extension, e2, back.to_source);
    const auto xi = derive_xi(back.extension, e2, w.eta.coordinates());
    bool isoclinic = xi.status == SolveStatus::total;
    if (isoclinic) isoclinic = check_witness(back.extension, e2, IsoclinismWitness<S>{w.eta, *xi.map}).ok();
    report.result["isoclinic_to_second"] = isoclinic;
  } else {
    const auto dp = diagonal_pullback(e1, e2, eta);
    report.result["extension"] = extension_json(dp.extension);
    report.result["first_projection_isoclinic"] = is_isoclinic_homomorphism(dp.extension, e1, dp.first).isoclinic;
    report.result["second_projection_isoclinic"] = is_isoclinic_homomorphism(dp.extension, e2, dp.second).isoclinic;
    const Matrix<S> inc = vstack(dp.first.beta.matrix(), dp.second.beta.matrix());
    report.result["commutator_is_graph_of_xi"] =
        image(inc, lie_commutator(dp.extension.g())) == graph_of(w.xi, e1.g().dim(), e2.g().dim());
  }
  return {std::move(report), got.exit};
}

template <class S>
CommandOutcome extension_single_impl(const ExtensionRequest& req, const LeibnizAlgebra<S>& g, Report report) {
  report.status = "ok";
  if (req.kind == "canonical") {
    report.result["extension"] = extension_json(canonical_extension(g));
  } else if (req.kind == "product") {
    if (req.abelian_dim < 0) throw std::invalid_argument("--abelian must be non-negative");
    const auto e = canonical_extension(g);
    const auto p = product_with_abelian(e, LeibnizAlgebra<S>::abelian(g.field(), req.abelian_dim));
    report.result["abelian_dim"] = req.abelian_dim;
    report.result["extension"] = extension_json(p.extension);
    report.result["projection_isoclinic"] = is_isoclinic_homomorphism(p.extension, e, p.projection).isoclinic;
    report.result["inclusion_isoclinic"] = is_isoclinic_homomorphism(e, p.extension, p.inclusion).isoclinic;
  } else {
    // 0 -> g^ann -> g -> g_Lie -> 0, which need not be Lie-central.
    const auto ann = annihilator_ideal(g);
    const auto check = check_extension(subalgebra(g, ann).inclusion, quotient_algebra(g, ann).projection);
    report.result["annihilator"] = subspace_json(ann, g);
    report.result["lie_central"] = check.lie_central;
    if (check.ok()) {
      report.result["extension"] = extension_json(extension_by_ideal(g, ann));
    } else {
      report.status = "violation";
      report.result["failure"] = check.failure();
      if (check.central_violation)
        report.result["central_violation"] =
            Json{{"kernel_element", format_vector(check.central_violation->first, g.names(), g.field())},
                 {"against", g.names()[static_cast<std::size_t>(check.central_violation->second)]}};
      return {std::move(report), exit_code::violation};
    }
  }
  return {std::move(report), exit_code::ok};
}

Report start(const std::string& command) {
  Report r;
  r.command = command;
  return r;
}

}  // namespace

Field parse_field_flag(const std::string& text) {
  if (text == "Q") return Field::rationals();
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); }) || text.size() > 10)
    throw Error(ErrorKind::field, "field must be Q or an odd prime, got '" + text + "'");
  return parse_field(Json{{"p", std::stoll(text)}});
}

LoadedAlgebra load_algebra(const std::string& ref, const CommandOptions& opts, bool check) {
  if (ref.rfind(catalog_prefix, 0) == 0)
    return {ref, catalog_algebra(ref.substr(catalog_prefix.size()), opts.field.value_or(Field::rationals()))};
  const Json doc = read_json_file(ref);
  auto alg = check ? parse(doc) : parse_unchecked(doc);
  if (opts.field && field_of(alg) != *opts.field)
    throw Error(ErrorKind::field, "'" + ref + "' is over " + field_of(alg).to_string() + ", expected " + opts.field->to_string());
  return {ref, std::move(alg)};
}

CommandOutcome run_validate(const std::string& ref, const CommandOptions& opts) {
  auto report = start("validate");
  const auto loaded = load_algebra(ref, opts, false);
  report.inputs.push_back(digest(loaded.name, loaded.algebra));
  bool ok = true;
  std::visit(
      [&](const auto& g) {
        const auto check = validate(g);
        ok = check.ok;
        report.result["field"] = field_json(g.field());
        report.result["dim"] = g.dim();
        report.result["valid"] = check.ok;
        if (!check.ok) {
          const auto& t = check.triple;
          Json triple = Json::array();
          for (Index k : t) triple.push_back(g.names()[static_cast<std::size_t>(k)]);
          report.result["violation"] = Json{{"triple", triple},
                                            {"indices", Json::array({t[0], t[1], t[2]})},
                                            {"residual", format_vector(check.residual, g.names(), g.field())},
                                            {"residual_coordinates", vector_json(check.residual, g.field())}};
        }
      },
      loaded.algebra);
  report.status = ok ? "ok" : "violation";
  return {std::move(report), ok ? exit_code::ok : exit_code::violation};
}

CommandOutcome run_invariants(const std::string& ref, const CommandOptions& opts) {
  auto report = start("invariants");
  const auto loaded = load_algebra(ref, opts);
  report.inputs.push_back(digest(loaded.name, loaded.algebra));
  report.result = std::visit([](const auto& g) { return algebra_invariants_json(g); }, loaded.algebra);
  report.status = "ok";
  return {std::move(report), exit_code::ok};
}

CommandOutcome run_isoclinic(const std::string& a, const std::string& b, const std::optional<std::string>& witness_path,
                             const CommandOptions& opts) {
  auto report = start("isoclinic");
  const auto la = load_algebra(a, opts), lb = load_algebra(b, opts);
  report.inputs.push_back(digest(la.name, la.algebra));
  report.inputs.push_back(digest(lb.name, lb.algebra));
  return with_pair(la.algebra, lb.algebra,
                   [&](const auto& x, const auto& y) { return isoclinic_impl(x, y, witness_path, opts, report); });
}

CommandOutcome run_classify(const std::string& dir, const CommandOptions& opts) {
  namespace fs = std::filesystem;
  auto report = start("classify");
  if (!fs::is_directory(dir)) throw std::ios_base::failure("'" + dir + "' is not a readable directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end(), [](const fs::path& x, const fs::path& y) { return x.filename() < y.filename(); });

  std::vector<LeibnizAlgebra<Fp>> algebras;
  std::vector<std::string> names;
  std::optional<Field> field = opts.field;
  for (const auto& path : files) {
    auto loaded = load_algebra(path.string(), opts);
    if (!field) field = field_of(loaded.algebra);
    if (field_of(loaded.algebra) != *field)
      throw Error(ErrorKind::field, "'" + path.string() + "' is over " + field_of(loaded.algebra).to_string() + ", expected " +
                                        field->to_string());
    if (!field->is_prime()) throw Error(ErrorKind::search, "classify needs a finite field (pass --field p and F_p documents)");
    report.inputs.push_back(digest(path.filename().string(), loaded.algebra));
    names.push_back(path.filename().string());
    algebras.push_back(std::get<LeibnizAlgebra<Fp>>(std::move(loaded.algebra)));
  }
  const auto c = classify(algebras, opts.search);
  Json classes = Json::array();
  for (const auto& members : c.classes) {
    Json member_names = Json::array();
    for (auto i : members) member_names.push_back(names[i]);
    classes.push_back(Json{{"representative", names[members.front()]},
                           {"members", member_names},
                           {"invariants", invariants_json(isoclinism_invariants(canonical_extension(algebras[members.front()])))}});
  }
  Json entries = Json::array();
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    const auto& w = c.witness_from_representative[i];
    entries.push_back(Json{{"name", names[i]},
                           {"dim", algebras[i].dim()},
                           {"class", c.class_of[i]},
                           {"eta_from_representative", matrix_json(w.eta.coordinates(), algebras[i].field())},
                           {"xi_from_representative", matrix_json(w.xi.coordinates(), algebras[i].field())}});
  }
  report.result["field"] = field ? field_json(*field) : Json(nullptr);
  report.result["class_count"] = c.classes.size();
  report.result["classes"] = std::move(classes);
  report.result["algebras"] = std::move(entries);
  report.status = "ok";
  return {std::move(report), exit_code::ok};
}

CommandOutcome run_extension(const ExtensionRequest& req, const CommandOptions& opts) {
  auto report = start("extension " + req.kind);
  const bool pair = req.kind == "backward" || req.kind == "pullback";
  const bool single = req.kind == "canonical" || req.kind == "product" || req.kind == "liezation";
  if (!pair && !single) throw std::invalid_argument("unknown extension kind '" + req.kind + "'");
  const std::size_t wanted = pair ? 2 : 1;
  if (req.refs.size() != wanted) throw std::invalid_argument("extension " + req.kind + " takes " + std::to_string(wanted) + " algebra(s)");
  std::vector<LoadedAlgebra> loaded;
  for (const auto& r : req.refs) {
    loaded.push_back(load_algebra(r, opts));
    report.inputs.push_back(digest(loaded.back().name, loaded.back().algebra));
  }
  if (single)
    return std::visit([&](const auto& g) { return extension_single_impl(req, g, report); }, loaded.front().algebra);
  return with_pair(loaded[0].algebra, loaded[1].algebra, [&](const auto& x, const auto& y) {
    return extension_pair_impl(req.kind, x, y, req.witness_path, opts, report);
  });
}

CommandOutcome run_catalog_list() {
  auto report = start("catalog list");
  Json entries = Json::array();
  for (const auto& e : catalog_entries()) entries.push_back(Json{{"name", e.name}, {"description", e.description}});
  report.result["entries"] = std::move(entries);
  report.status = "ok";
  return {std::move(report), exit_code::ok};
}

CommandOutcome run_catalog_show(const std::string& name, const CommandOptions& opts) {
  auto report = start("catalog show");
  const auto alg = catalog_algebra(name, opts.field.value_or(Field::rationals()));
  report.inputs.push_back(digest(catalog_prefix + name, alg));
  report.result["document"] = serialize(alg);
  report.status = "ok";
  return {std::move(report), exit_code::ok};
}

CommandOutcome run_suite_command(const SuiteConfig& config) {
  auto report = start("suite");
  const auto results = run_suite(config);
  report.result = suite_json(config, results);
  report.status = report.result["all_passed"].get<bool>() ? "ok" : "failed";
  return {std::move(report), exit_code::ok};
}

CommandOutcome error_outcome(const std::string& command, const std::exception& err) {
  auto report = start(command);
  report.status = "error";
  std::string kind = "internal";
  int code = exit_code::failure;
  if (const auto* e = dynamic_cast<const Error*>(&err)) {
    kind = to_string(e->kind());
    if (e->kind() == ErrorKind::schema || e->kind() == ErrorKind::field || e->kind() == ErrorKind::leibniz_identity)
      code = exit_code::bad_input;
  } else if (dynamic_cast<const std::ios_base::failure*>(&err) || dynamic_cast<const std::filesystem::filesystem_error*>(&err)) {
    kind = "io";
    code = exit_code::io;
  } else if (dynamic_cast<const std::invalid_argument*>(&err)) {
    kind = "usage";
    code = exit_code::usage;
  }
  report.result["error"] = Json{{"kind", kind}, {"message", err.what()}};
  return {std::move(report), code};
}

}  // namespace leibalg
