#include "afschur.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "commands.hpp"

struct afs_session {
  std::string last_error;
};

extern "C" {

afs_session* afs_session_new(void) {
  return new (std::nothrow) afs_session;
}

void afs_session_free(afs_session* s) { delete s; }

int afs_run_json(afs_session* s, const char* request, char** response) {
  if (response) *response = nullptr;
  if (!s) return AFS_CONTRACT;
  s->last_error.clear();
  if (!request) {
    s->last_error = "null request";
    return AFS_CONTRACT;
  }
  afs::CommandOutcome out = afs::run_command(request);
  if (out.code != AFS_OK) s->last_error = out.body;
  if (response) {
    *response = static_cast<char*>(std::malloc(out.body.size() + 1));
    if (!*response) {
      s->last_error = "allocation failure";
      return AFS_INTERNAL;
    }
    std::memcpy(*response, out.body.c_str(), out.body.size() + 1);
  }
  return out.code;
}

const char* afs_last_error(const afs_session* s) {
  return s ? s->last_error.c_str() : "";
}

void afs_free(char* buf) { std::free(buf); }

}  // extern "C"
