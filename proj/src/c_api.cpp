#include "ftpoly/ftpoly.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "ftpoly/error.hpp"
#include "ftpoly/io.hpp"
#include "ftpoly/report.hpp"

struct ft_instance {
  ftpoly::Instance value;
};

struct ft_polytope {
  ftpoly::ConstraintSystem system;
  std::vector<ftpoly::Vertex> vertices;
};

namespace {

thread_local std::string g_last_error;

ft_status to_status(ftpoly::ErrorCode code) {
  using ftpoly::ErrorCode;
  switch (code) {
    case ErrorCode::Empty: return FT_ERR_EMPTY;
    case ErrorCode::OddCount: return FT_ERR_ODD_COUNT;
    case ErrorCode::OutOfRange: return FT_ERR_OUT_OF_RANGE;
    case ErrorCode::NotPositive: return FT_ERR_NOT_POSITIVE;
    case ErrorCode::DimensionMismatch: return FT_ERR_DIMENSION_MISMATCH;
    case ErrorCode::DimensionCap: return FT_ERR_DIMENSION_CAP;
    case ErrorCode::ScaleCap: return FT_ERR_SCALE_CAP;
    case ErrorCode::NotAPartition: return FT_ERR_NOT_A_PARTITION;
    case ErrorCode::NotHalfMax: return FT_ERR_NOT_HALF_MAX;
    case ErrorCode::IndexInSubset: return FT_ERR_INDEX_IN_SUBSET;
    case ErrorCode::Disconnected: return FT_ERR_DISCONNECTED;
    case ErrorCode::Parse: return FT_ERR_PARSE;
    case ErrorCode::Io: return FT_ERR_IO;
  }
  return FT_ERR_INTERNAL;
}

ft_status fail(ft_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <class F>
ft_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const ftpoly::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(FT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(FT_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::size_t effective_cap(std::size_t max_dim) { return max_dim == 0 ? ftpoly::kDefaultDimensionCap : max_dim; }

std::vector<ftpoly::Element> elements_of(const ft_instance* inst) {
  auto e = inst->value.elements();
  return {e.begin(), e.end()};
}

}  // namespace

extern "C" {

const char* ft_status_string(ft_status status) {
  switch (status) {
    case FT_OK: return "ok";
    case FT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case FT_ERR_EMPTY: return "empty instance";
    case FT_ERR_ODD_COUNT: return "odd element count";
    case FT_ERR_OUT_OF_RANGE: return "value out of range";
    case FT_ERR_NOT_POSITIVE: return "instance not positive";
    case FT_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
    case FT_ERR_DIMENSION_CAP: return "dimension cap exceeded";
    case FT_ERR_SCALE_CAP: return "oracle scale cap exceeded";
    case FT_ERR_NOT_A_PARTITION: return "not an exact partition";
    case FT_ERR_NOT_HALF_MAX: return "element is not s_max/2";
    case FT_ERR_INDEX_IN_SUBSET: return "index belongs to the subset";
    case FT_ERR_DISCONNECTED: return "graph is disconnected";
    case FT_ERR_PARSE: return "parse error";
    case FT_ERR_IO: return "i/o error";
    case FT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* ft_last_error(void) { return g_last_error.c_str(); }

void ft_string_free(char* s) { std::free(s); }

ft_status ft_instance_create(const int64_t* elements, size_t count, ft_instance** out) {
  if (!out || (!elements && count != 0)) return fail(FT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new ft_instance{ftpoly::Instance(std::vector<ftpoly::Element>(elements, elements + count))};
    return FT_OK;
  });
}

ft_status ft_instance_parse(const char* text, ft_instance** out) {
  if (!text || !out) return fail(FT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new ft_instance{ftpoly::Instance(ftpoly::parse_instance_text(text))};
    return FT_OK;
  });
}

void ft_instance_free(ft_instance* inst) { delete inst; }

size_t ft_instance_size(const ft_instance* inst) { return inst ? inst->value.size() : 0; }

ft_status ft_instance_elements(const ft_instance* inst, int64_t* buffer, size_t capacity) {
  if (!inst || (!buffer && capacity != 0)) return fail(FT_ERR_INVALID_ARGUMENT, "null argument");
  auto e = inst->value.elements();
  for (size_t i = 0; i < capacity && i < e.size(); ++i) buffer[i] = e[i];
  return FT_OK;
}

ft_status ft_instance_translate_positive(const ft_instance* inst, ft_instance** out, int64_t* shift) {
  if (!inst || !out) return fail(FT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto t = ftpoly::translate_positive(inst->value);
    if (shift) *shift = t.shift;
    *out = new ft_instance{std::move(t.instance)};
    return FT_OK;
  });
}

ft_status ft_instance_oddify(const ft_instance* inst, ft_instance** out, int* added) {
  if (!inst || !out) return fail(FT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto o = ftpoly::oddify(inst->value);
    if (added) *added = o.added;
    *out = new ft_instance{std::move(o.instance)};
    return FT_OK;
  });
}

ft_status ft_polytope_create(const ft_instance* inst, size_t max_dim, ft_polytope** out) {
  if (!inst || !out) return fail(FT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto cs = ftpoly::build_constraints(inst->value);
    auto vs = ftpoly::enumerate_all(cs, effective_cap(max_dim));
    *out = new ft_polytope{std::move(cs), std::move(vs)};
    return FT_OK;
  });
}

ft_status ft_polytope_from_ine(const char* text, size_t max_dim, ft_polytope** out) {
  if (!text || !out) return fail(FT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto cs = ftpoly::parse_ine(text);
    auto vs = ftpoly::enumerate_all(cs, effective_cap(max_dim));
    *out = new ft_polytope{std::move(cs), std::move(vs)};
    return FT_OK;
  });
}

void ft_polytope_free(ft_polytope* poly) { delete poly; }

size_t ft_polytope_dimension(const ft_polytope* poly) { return poly ? poly->system.dimension() : 0; }

size_t ft_polytope_vertex_count(const ft_polytope* poly) { return poly ? poly->vertices.size() : 0; }

size_t ft_polytope_degenerate_count(const ft_polytope* poly) {
  if (!poly) return 0;
  size_t n = 0;
  for (const auto& v : poly->vertices) n += v.degenerate;
  return n;
}

ft_status ft_polytope_vertex_coord(const ft_polytope* poly, size_t vertex, size_t coord, char** out) {
  if (!poly || !out) return fail(FT_ERR_INVALID_ARGUMENT, "null argument");
  if (vertex >= poly->vertices.size() || coord >= poly->system.dimension())
    return fail(FT_ERR_OUT_OF_RANGE, "vertex or coordinate index out of range");
  return guarded([&] {
    *out = dup_string(ftpoly::to_string(poly->vertices[vertex].coords[coord]));
    return FT_OK;
  });
}

ft_status ft_polytope_vertex_active_count(const ft_polytope* poly, size_t vertex, size_t* out) {
  if (!poly || !out) return fail(FT_ERR_INVALID_ARGUMENT, "null argument");
  if (vertex >= poly->vertices.size()) return fail(FT_ERR_OUT_OF_RANGE, "vertex index out of range");
  *out = poly->vertices[vertex].active.count();
  return FT_OK;
}

ft_status ft_polytope_export(const ft_polytope* poly, ft_format format, char** out) {
  if (!poly || !out) return fail(FT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    switch (format) {
      case FT_FORMAT_INE: *out = dup_string(ftpoly::write_ine(poly->system)); return FT_OK;
      case FT_FORMAT_EXT: *out = dup_string(ftpoly::write_ext(poly->system, poly->vertices)); return FT_OK;
      case FT_FORMAT_JSON: {
        auto e = poly->system.instance().elements();
        ftpoly::AnalyzeOptions opts;
        opts.max_dim = std::max(opts.max_dim, poly->system.dimension());
        *out = dup_string(ftpoly::render_json(ftpoly::analyze({e.begin(), e.end()}, opts)));
        return FT_OK;
      }
    }
    return fail(FT_ERR_INVALID_ARGUMENT, "unknown export format");
  });
}

ft_status ft_analyze(const ft_instance* inst, const ft_analyze_options* opts, char** report, int* verifiers_ok) {
  if (!inst || !report) return fail(FT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    ftpoly::AnalyzeOptions o;
    bool json = false;
    if (opts) {
      o.preprocess = opts->preprocess != 0;
      o.max_dim = effective_cap(opts->max_dim);
      json = opts->json != 0;
    }
    ftpoly::Report r = ftpoly::analyze(elements_of(inst), o);
    if (verifiers_ok) *verifiers_ok = r.verifiers_ok() ? 1 : 0;
    *report = dup_string(json ? ftpoly::render_json(r) : ftpoly::render_table(r));
    return FT_OK;
  });
}

ft_status ft_solve(const ft_instance* inst, char** text, int* has_partition, int* consistent) {
  if (!inst || !text) return fail(FT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    ftpoly::SolveResult r = ftpoly::solve(elements_of(inst));
    if (has_partition) *has_partition = r.certificate ? 1 : 0;
    if (consistent) *consistent = r.consistent ? 1 : 0;
    *text = dup_string(ftpoly::render_solve(r));
    return FT_OK;
  });
}

ft_status ft_check_lemmas(size_t count, uint64_t seed, const size_t* sizes, size_t size_count, char** summary,
                          int* all_pass) {
  if (!summary || (!sizes && size_count != 0)) return fail(FT_ERR_INVALID_ARGUMENT, "null argument");
  for (size_t i = 0; i < size_count; ++i) {
    if (sizes[i] < 2 || sizes[i] % 2 != 0 || sizes[i] > ftpoly::kDefaultDimensionCap)
      return fail(FT_ERR_INVALID_ARGUMENT, "sizes must be even and between 2 and 16");
  }
  return guarded([&] {
    ftpoly::CheckOptions o;
    o.count = count;
    o.seed = seed;
    o.sizes.assign(sizes, sizes + size_count);
    ftpoly::CheckSummary s = ftpoly::check_lemmas(o);
    if (all_pass) *all_pass = s.all_pass() ? 1 : 0;
    *summary = dup_string(ftpoly::render_check(s));
    return FT_OK;
  });
}

}  // extern "C"
