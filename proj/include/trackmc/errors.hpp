#pragma once

#include <stdexcept>
#include <string>

namespace trackmc {

// Base for all domain errors thrown by this library. Everything else
// (std::invalid_argument, std::logic_error) signals API misuse.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// core
class EmptyTrackletError : public Error { public: using Error::Error; };
class DuplicateFrameError : public Error { public: using Error::Error; };
class InvalidDetectionError : public Error { public: using Error::Error; };
class NotPrecedingError : public Error { public: using Error::Error; };
class LengthMismatchError : public Error { public: using Error::Error; };
class FrameCollisionError : public Error { public: using Error::Error; };

// affinity
class MissingGroundTruthError : public Error { public: using Error::Error; };
class ImpureTrackletError : public Error { public: using Error::Error; };

// multicut
class IncompleteLabelingError : public Error { public: using Error::Error; };
class TooLargeError : public Error { public: using Error::Error; };
class InfeasibleInitError : public Error { public: using Error::Error; };

// edgegen
class NoSamplesError : public Error { public: using Error::Error; };
class NoStatsError : public Error { public: using Error::Error; };

// samplegen
class TrackTooShortError : public Error { public: using Error::Error; };
class NoCandidateError : public Error { public: using Error::Error; };
class ExhaustedError : public Error { public: using Error::Error; };

// io
class IoError : public Error { public: using Error::Error; };
class ConfigError : public Error { public: using Error::Error; };

// Parse failure carrying the 1-based line number of the offending row.
class MalformedLineError : public Error {
 public:
  MalformedLineError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace trackmc
