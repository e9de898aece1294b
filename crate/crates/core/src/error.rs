//! Error type shared by the simulator, pattern, circuit and algorithm layers.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("requested {requested} qubits but the configured cap is {cap}")]
    CapacityExceeded { requested: usize, cap: usize },

    #[error("qubit index {index} out of range for a {num_qubits}-qubit register")]
    QubitOutOfRange { index: usize, num_qubits: usize },

    #[error("duplicate target qubit {index}")]
    DuplicateTarget { index: usize },

    #[error("matrix is not unitary (max deviation from U\u{2020}U = I is {deviation:.3e})")]
    NotUnitary { deviation: f64 },

    #[error("mapping is not a bijection on 0..{dim}")]
    NotBijective { dim: usize },

    #[error("gate shape mismatch: expected dimension {expected}, got {actual}")]
    GateShape { expected: usize, actual: usize },

    #[error("state has {actual} qubits, expected {expected}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("amplitude vector of length {len} is not a nonzero power of two")]
    BadAmplitudeCount { len: usize },

    #[error("amplitude vector has zero norm")]
    ZeroNorm,

    #[error("amplitude at index {index} is not finite")]
    NonFiniteAmplitude { index: usize },

    #[error("phase angle is not finite")]
    NonFiniteAngle,

    #[error("state norm {norm} is not 1 within tolerance")]
    NotNormalized { norm: f64 },

    #[error("cannot measure an empty qubit set")]
    EmptyMeasurement,

    #[error("invalid bipartition: {reason}")]
    InvalidCut { reason: String },

    #[error("refusing to discard qubits that are entangled with the rest of the register")]
    EntangledDiscard,

    #[error("register layout invalid: {reason}")]
    BadLayout { reason: String },

    #[error("bitstring {given:?} does not name a basis state of {expected} qubits")]
    BadBitstring { given: String, expected: usize },

    #[error("indicator ancilla initialization needs a one-qubit workspace, layout has {m}")]
    IndicatorAncillaArity { m: usize },

    #[error("truth table has {len} entries, expected {expected}")]
    TableLength { len: usize, expected: usize },

    #[error("truth table entry {value} at input {index} does not fit in {m} output bits")]
    TableEntryRange { value: u64, index: usize, m: usize },

    #[error("operation needs an indicator function (m = 1), got m = {m}")]
    NotIndicator { m: usize },

    #[error("function is neither constant nor balanced ({ones} ones over {size} inputs)")]
    NotConstantOrBalanced { ones: usize, size: usize },

    #[error("function does not satisfy the hidden-shift promise: {reason}")]
    HiddenShiftPromise { reason: String },

    #[error("good set is empty on the prepared state; amplification cannot make progress")]
    NoSolution,

    #[error("good set universe {universe} does not match state dimension {dim}")]
    UniverseMismatch { universe: usize, dim: usize },

    #[error("good set index {index} is outside universe of size {universe}")]
    GoodIndexOutOfRange { index: u64, universe: usize },

    #[error("explicit indices and predicate disagree at basis index {index}")]
    GoodSetDisagreement { index: u64 },

    #[error("circuit contains a measurement at op {index}; a measurement-free circuit is required")]
    MeasurementPresent { index: usize },

    #[error("op {index} ({gate}) has no QASM 2.0 form; lower it to h/x/z/u1/cx/swap first")]
    QasmUnsupported { index: usize, gate: String },

    #[error("pattern {pattern} has no gate-level realization")]
    NotRecordable { pattern: String },

    #[error("round budget of {budget} exhausted without isolating the hidden shift")]
    RoundBudgetExhausted { budget: u64 },

    #[error("nullspace enumeration supports width <= 20 bits, got {width}")]
    NullspaceTooWide { width: usize },

    #[error("row {row:#b} does not fit in {width} bits")]
    RowTooWide { row: u64, width: usize },

    #[error("failed to parse document: {0}")]
    Parse(String),
}
