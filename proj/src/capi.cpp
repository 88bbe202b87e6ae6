#include "coverlab/coverlab.h"

#include <new>
#include <string>

#include "json_io.hpp"
#include "version.hpp"

struct coverlab_result {
  coverlab_status status = COVERLAB_EINTERNAL;
  std::string report_json;
  std::string report_text;
  std::string error_code;
  std::string error_message;
};

namespace {

using coverlab::Error;
using coverlab::ErrorClass;
namespace io = coverlab::io;

coverlab_status status_of(ErrorClass cls) {
  switch (cls) {
    case ErrorClass::invalid_input: return COVERLAB_EINPUT;
    case ErrorClass::bound_exceeded: return COVERLAB_EBOUND;
    default: return COVERLAB_EINTERNAL;
  }
}

coverlab_status finish(coverlab_result* r, coverlab_result** out) {
  const coverlab_status s = r->status;
  if (out) *out = r;
  else delete r;
  return s;
}

template <typename Fn>
coverlab_status run_guarded(coverlab_result** out, Fn&& fn) {
  if (out) *out = nullptr;
  auto* r = new (std::nothrow) coverlab_result;
  if (!r) return COVERLAB_EINTERNAL;
  try {
    io::RunResult result = fn();
    r->status = static_cast<coverlab_status>(result.status);
    r->report_json = io::render_json(result.report);
    r->report_text = io::render_text(result.report);
  } catch (const Error& e) {
    r->status = status_of(e.error_class());
    r->error_code = e.code();
    r->error_message = e.what();
    io::json report{{"error", e.code()}, {"message", e.what()},
                    {"tool_version", coverlab::kToolVersion}};
    r->report_json = io::render_json(report);
    r->report_text = std::string("error ") + e.code() + ": " + e.what() + "\n";
  } catch (const std::exception& e) {
    r->status = COVERLAB_EINTERNAL;
    r->error_code = "Internal";
    r->error_message = e.what();
    io::json report{{"error", "Internal"}, {"message", e.what()},
                    {"tool_version", coverlab::kToolVersion}};
    r->report_json = io::render_json(report);
    r->report_text = std::string("error Internal: ") + e.what() + "\n";
  }
  return finish(r, out);
}

io::json parse_document(const char* text, const char* what) {
  if (!text) coverlab::fail_input("Schema", std::string(what) + " is null");
  io::json j = io::json::parse(text, nullptr, false);
  if (j.is_discarded())
    coverlab::fail_input("Json", std::string("malformed JSON in ") + what);
  return j;
}

}  // namespace

extern "C" {

const char* coverlab_version(void) { return coverlab::kToolVersion; }

coverlab_status coverlab_run_json(const char* request_json, coverlab_result** out) {
  return run_guarded(out, [&] { return io::run_request(parse_document(request_json, "request")); });
}

coverlab_status coverlab_descriptor_check(const char* predicate, const char* descriptor_json,
                                          coverlab_result** out) {
  return run_guarded(out, [&] {
    if (!predicate) coverlab::fail_input("Schema", "predicate is null");
    return io::run_descriptor_check(predicate, parse_document(descriptor_json, "descriptor"));
  });
}

coverlab_status coverlab_group_cover(const char* action, const char* problem_json,
                                     coverlab_result** out) {
  return run_guarded(out, [&] {
    if (!action) coverlab::fail_input("Schema", "action is null");
    return io::run_group_cover(action, parse_document(problem_json, "problem"));
  });
}

coverlab_status coverlab_lattice_verify(const char* cover_json, long box_radius,
                                        coverlab_result** out) {
  return run_guarded(out, [&] {
    return io::run_lattice_verify(parse_document(cover_json, "cover"), box_radius);
  });
}

coverlab_status coverlab_zx_verify(unsigned long long samples, unsigned long long seed,
                                   coverlab_result** out) {
  return run_guarded(out, [&] { return io::run_zx_verify(samples, seed); });
}

coverlab_status coverlab_units_classify(const char* rationals_json, coverlab_result** out) {
  return run_guarded(out, [&] {
    io::json arr = parse_document(rationals_json, "rationals");
    if (!arr.is_array()) coverlab::fail_input("Schema", "rationals must be a JSON array");
    std::vector<std::string> rationals;
    for (const auto& v : arr) {
      if (!v.is_string()) coverlab::fail_input("Schema", "rationals must be strings");
      rationals.push_back(v.get<std::string>());
    }
    return io::run_units_classify(rationals);
  });
}

coverlab_status coverlab_field_refute(const char* request_json, coverlab_result** out) {
  return run_guarded(out, [&] {
    return io::run_field_refute(parse_document(request_json, "request"));
  });
}

coverlab_status coverlab_result_status(const coverlab_result* r) {
  return r ? r->status : COVERLAB_EINTERNAL;
}

const char* coverlab_result_json(const coverlab_result* r) {
  return r ? r->report_json.c_str() : "";
}

const char* coverlab_result_text(const coverlab_result* r) {
  return r ? r->report_text.c_str() : "";
}

const char* coverlab_result_error_code(const coverlab_result* r) {
  return r ? r->error_code.c_str() : "";
}

const char* coverlab_result_error(const coverlab_result* r) {
  return r ? r->error_message.c_str() : "";
}

void coverlab_result_free(coverlab_result* r) { delete r; }

}  // extern "C"
