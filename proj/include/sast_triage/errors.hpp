#pragma once

#include <stdexcept>
#include <string>

namespace sast_triage {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// corpus
class MissingFileError : public Error { public: using Error::Error; };
class LabelOutOfRangeError : public Error { public: using Error::Error; };
class DuplicateFileIdError : public Error { public: using Error::Error; };
class ManifestParseError : public Error { public: using Error::Error; };
class EncodingError : public Error { public: using Error::Error; };

// sast
class ToolNotFoundError : public Error { public: using Error::Error; };
class ToolCrashedError : public Error { public: using Error::Error; };
class ReportParseError : public Error { public: using Error::Error; };

// llm
class CacheMissError : public Error { public: using Error::Error; };
class TransportError : public Error { public: using Error::Error; };
class AuthError : public Error { public: using Error::Error; };
class ConflictError : public Error { public: using Error::Error; };

// protocol
class LabelsRequiredError : public Error { public: using Error::Error; };
class LabelsForbiddenError : public Error { public: using Error::Error; };
class NoJsonFoundError : public Error { public: using Error::Error; };
class MalformedObjectError : public Error { public: using Error::Error; };

// report / cli
class ConfigError : public Error { public: using Error::Error; };
class IoError : public Error { public: using Error::Error; };

} // namespace sast_triage
