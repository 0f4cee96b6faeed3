class PKError(Exception): ...
class InputError(PKError): ...
class DimensionMismatch(InputError): ...
class ParseError(InputError): ...
class MalformedWeights(InputError): ...
class NotContained(InputError): ...
class UnsupportedArrangement(InputError): ...
class InternalInconsistency(PKError): ...
