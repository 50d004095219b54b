// Request dispatch shared by the C API and the command-line tool.
//
// A request is a JSON document {"command": <name>, ...flags...}. Element
// inputs ("left", "right", "input") are inline JSON objects or strings naming
// files that contain one. The outcome carries the response document (JSON
// with sorted keys, or plain text when "format" is "text") and the process
// exit code: 0 success, 1 internal verification failure, 2 contract
// violation (including malformed JSON, reported with position).
#pragma once

#include <string>

namespace afs {

struct CommandOutcome {
  int code = 0;
  std::string body;
};

CommandOutcome run_command(const std::string& request_text);

}  // namespace afs
