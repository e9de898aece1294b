//! The shipped pattern catalog and its link graph.
//!
//! Each entry is a structured document: name (plus any aliases), intent,
//! an icon reference, problem statement, context, solution summary and
//! known uses, together with the outgoing links that knit the entries into
//! a navigable language. Every link target names another catalog entry.

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct PatternLink {
    /// Identifier of the linked pattern.
    pub to: &'static str,
    /// Why you would follow this link.
    pub note: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct PatternDoc {
    /// Stable identifier, also the node name in graph output.
    pub id: &'static str,
    /// Display name.
    pub name: &'static str,
    pub aliases: &'static [&'static str],
    pub intent: &'static str,
    pub icon: &'static str,
    pub problem: &'static str,
    pub context: &'static str,
    pub solution: &'static str,
    pub known_uses: &'static str,
    pub next: &'static [PatternLink],
}

impl PatternDoc {
    /// Display name with aliases, e.g. `Uncompute (aka Unentangling aka
    /// Copy-Uncompute)`.
    pub fn full_name(&self) -> String {
        if self.aliases.is_empty() {
            self.name.to_string()
        } else {
            let akas: Vec<String> = self.aliases.iter().map(|a| format!("aka {a}")).collect();
            format!("{} ({})", self.name, akas.join(" "))
        }
    }
}

/// All shipped patterns.
pub fn pattern_catalog() -> &'static [PatternDoc] {
    CATALOG
}

/// Case-insensitive lookup by id, name or alias; spaces and hyphens are
/// ignored.
pub fn find_pattern(name: &str) -> Option<&'static PatternDoc> {
    let wanted = fold(name);
    CATALOG.iter().find(|doc| {
        fold(doc.id) == wanted
            || fold(doc.name) == wanted
            || doc.aliases.iter().any(|a| fold(a) == wanted)
    })
}

fn fold(name: &str) -> String {
    name.chars()
        .filter(|c| !matches!(c, ' ' | '-' | '_'))
        .map(|c| c.to_ascii_lowercase())
        .collect()
}

/// Directed link edges (from-id, to-id, note).
pub fn pattern_graph() -> Vec<(&'static str, &'static str, &'static str)> {
    CATALOG
        .iter()
        .flat_map(|doc| doc.next.iter().map(|link| (doc.id, link.to, link.note)))
        .collect()
}

static CATALOG: &[PatternDoc] = &[
    PatternDoc {
        id: "Initialization",
        name: "Initialization",
        aliases: &["State Preparation"],
        intent: "Put the register into a well-defined starting state that the rest of the algorithm can build on.",
        icon: "icons/initialization.svg",
        problem: "A register must be brought into a known input state cheaply, anticipating what the following steps need.",
        context: "Problem parameters are usually encoded by the early operators of an algorithm, and those operators assume a fixed starting point.",
        solution: "Start from the all-zeros basis state, reserving ancilla or workspace qubits as needed. Set a one-qubit indicator ancilla to one when membership will be read off signs; load a classical bitstring with bit flips; or inject a normalized amplitude vector directly onto the computational register.",
        known_uses: "Every gate-model algorithm starts with some form of state preparation.",
        next: &[
            PatternLink {
                to: "UniformSuperposition",
                note: "superposition is typically created right after initialization",
            },
            PatternLink {
                to: "FunctionTable",
                note: "function tables start from these initial states",
            },
            PatternLink {
                to: "Oracle",
                note: "an initialized register is handed to an oracle",
            },
        ],
    },
    PatternDoc {
        id: "UniformSuperposition",
        name: "Uniform Superposition",
        aliases: &[],
        intent: "Weight every classical value of a register equally so all of them enter the computation at once.",
        icon: "icons/uniform-superposition.svg",
        problem: "An equally weighted superposition of all basis states of a register has to be created.",
        context: "Quantum parallelism rests on registers that hold many values simultaneously; most algorithms want that spread to start unbiased.",
        solution: "Apply a Hadamard to each qubit of the all-zeros register, giving every basis state amplitude 2^(-n/2). Ancilla or workspace qubits are handled by a separate tensor factor, or left alone.",
        known_uses: "The opening move of most oracle algorithms, including Deutsch-Jozsa, Bernstein-Vazirani, Simon and Grover.",
        next: &[
            PatternLink {
                to: "Initialization",
                note: "builds on an initialized register",
            },
            PatternLink {
                to: "CreatingEntanglement",
                note: "a superposed register is ready to be entangled",
            },
            PatternLink {
                to: "Oracle",
                note: "a superposed register is fed to an oracle",
            },
        ],
    },
    PatternDoc {
        id: "CreatingEntanglement",
        name: "Creating Entanglement",
        aliases: &[],
        intent: "Correlate qubits strongly enough that the register carries joint information no product state can.",
        icon: "icons/creating-entanglement.svg",
        problem: "An entangled state has to be created from an unentangled starting state.",
        context: "Entanglement is one of the resources behind quantum speedups, and exponential speedups cannot do without it.",
        solution: "Superpose the input register and apply the reversible XOR embedding of a function. For any non-constant function the result entangles input and value registers; for the one-bit identity the embedding is exactly CNOT acting on a superposed control, producing a Bell pair.",
        known_uses: "Bell pairs, function-table states, and most oracle-based algorithms.",
        next: &[
            PatternLink {
                to: "Initialization",
                note: "initialization typically comes first",
            },
            PatternLink {
                to: "FunctionTable",
                note: "the same construction yields a function table",
            },
        ],
    },
    PatternDoc {
        id: "FunctionTable",
        name: "Function Table",
        aliases: &[],
        intent: "Evaluate a finite Boolean function on every input with a single oracle application.",
        icon: "icons/function-table.svg",
        problem: "Global properties of a function depend on its whole value table, but classical evaluation visits one input at a time.",
        context: "With a one-bit output the function is an indicator selecting the solutions of a decision problem.",
        solution: "Split the register into an n-qubit input part and an m-qubit value part, superpose the input part, and apply the XOR oracle once, leaving the equal-weight sum of |x>|f(x)>. With an indicator function and the ancilla prepared in the minus state, the same oracle instead flips the sign of each detected input - phase kickback.",
        known_uses: "Deutsch, Deutsch-Jozsa, Grover and Shor all consume function tables.",
        next: &[
            PatternLink {
                to: "Initialization",
                note: "requires an initialized register",
            },
            PatternLink {
                to: "UniformSuperposition",
                note: "the input part is superposed first",
            },
            PatternLink {
                to: "AmplitudeAmplification",
                note: "generalizes the function table",
            },
            PatternLink {
                to: "Oracle",
                note: "the evaluation is carried out by an oracle",
            },
            PatternLink {
                to: "Uncompute",
                note: "often needed before processing can continue",
            },
        ],
    },
    PatternDoc {
        id: "Oracle",
        name: "Oracle",
        aliases: &["Black Box"],
        intent: "Reuse a quantum computation without depending on how it works inside.",
        icon: "icons/oracle.svg",
        problem: "An algorithm needs values of a function while staying independent of the way those values are computed.",
        context: "Divide and conquer: a sealed subroutine with a declared register signature is the natural unit of reuse.",
        solution: "Package a unitary together with its input and output register arities and treat it as opaque; callers compose it purely by wiring registers.",
        known_uses: "Deutsch, Deutsch-Jozsa, Bernstein-Vazirani, Simon and Grover are all phrased against oracles.",
        next: &[
            PatternLink {
                to: "Uncompute",
                note: "oracle results usually need their workspace uncomputed",
            },
            PatternLink {
                to: "Initialization",
                note: "expects a properly prepared input register",
            },
        ],
    },
    PatternDoc {
        id: "Uncompute",
        name: "Uncompute",
        aliases: &["Unentangling", "Copy-Uncompute"],
        intent: "Reset temporary qubits so they can be discarded without damaging the result.",
        icon: "icons/uncompute.svg",
        problem: "Workspace qubits end up entangled with the computational basis and cannot simply be dropped unless the state factorizes.",
        context: "Computations park garbage in their workspace, which blocks access to the result, especially mid-algorithm.",
        solution: "Copy the result register into a fresh register with bitwise CNOTs, run the computation backwards to clear workspace and original result, swap the copy into place, and discard the now-separable spare register.",
        known_uses: "Deutsch-Jozsa, linear-system solvers, quantum walks, and reversible realizations of classical circuits.",
        next: &[
            PatternLink {
                to: "Oracle",
                note: "cleans up after an oracle's temporary qubits",
            },
            PatternLink {
                to: "FunctionTable",
                note: "a function table is one such oracle",
            },
        ],
    },
    PatternDoc {
        id: "PhaseShift",
        name: "Phase Shift",
        aliases: &[],
        intent: "Emphasize chosen basis states by rotating their phase.",
        icon: "icons/phase-shift.svg",
        problem: "Important components of a state must be marked efficiently, without touching their magnitudes.",
        context: "Iterative algorithms need a way to flag which parts of the current state improved.",
        solution: "Apply a diagonal operator that multiplies the amplitudes of a designated good set by a unit phase factor and leaves the rest unchanged; a variant assigns each marked basis state its own angle.",
        known_uses: "Both reflections inside Grover iterations; the kickback step of Deutsch-Jozsa.",
        next: &[
            PatternLink {
                to: "FunctionTable",
                note: "an indicator-function table is a sign flip on its good set",
            },
            PatternLink {
                to: "AmplitudeAmplification",
                note: "uses two phase shifts per round",
            },
            PatternLink {
                to: "Oracle",
                note: "a phase shift can stand in as an oracle",
            },
        ],
    },
    PatternDoc {
        id: "AmplitudeAmplification",
        name: "Amplitude Amplification",
        aliases: &[],
        intent: "Raise the probability of measuring a solution from run to run without intermediate measurements.",
        icon: "icons/amplitude-amplification.svg",
        problem: "A single run finds a solution only with small probability, and measuring destroys the state for further tries.",
        context: "A measurement-free preparation leaves some amplitude on the good set; iteration should concentrate it there.",
        solution: "Alternate a sign flip on the good set with a reflection about the prepared state (a sign flip on the all-zeros state conjugated by the preparation, times a global minus). With good amplitude a, about pi/(4a) rounds drive the success probability to its peak - quadratically fewer tries than classical repetition.",
        known_uses: "Grover search, Simon-style subroutines, linear-system solvers, black-box state preparation.",
        next: &[
            PatternLink {
                to: "FunctionTable",
                note: "the good-set sign flip is an indicator function table",
            },
            PatternLink {
                to: "PhaseShift",
                note: "that flip is also a special case of a phase shift",
            },
            PatternLink {
                to: "Oracle",
                note: "amplified routines are reused as oracles",
            },
        ],
    },
    PatternDoc {
        id: "SpeedupViaVerifying",
        name: "Speedup via Verifying",
        aliases: &[],
        intent: "Turn a cheap solution checker into a faster search.",
        icon: "icons/speedup-via-verifying.svg",
        problem: "Finding a solution is hard while checking a claimed solution is easy.",
        context: "Factoring versus multiplying: verification can be far cheaper than construction.",
        solution: "Hold all candidates in superposition and scan them with amplitude amplification, using the verifier as the oracle; on the order of sqrt(N) oracle calls isolate a solution.",
        known_uses: "Key cracking, Hamiltonian cycles, 3-SAT, traveling-salesman style searches.",
        next: &[PatternLink {
            to: "Oracle",
            note: "the verifier is packaged as an oracle",
        }],
    },
    PatternDoc {
        id: "QuantumClassicSplit",
        name: "Quantum-Classic Split",
        aliases: &[],
        intent: "Divide a solution between a classical computer and a quantum computer that cooperate.",
        icon: "icons/quantum-classic-split.svg",
        problem: "A problem is only partly quantum; the remainder belongs on classical hardware.",
        context: "Some algorithms inherently need classical pre- or post-processing, and small or noisy devices force further splitting.",
        solution: "Let the quantum side produce samples or transforms and drive it from classical control; where to cut is problem-specific, but recognizing that a cut exists is the essential step.",
        known_uses: "Simon and Shor post-processing, optimization loops with classical preprocessing, hybrid factoring on small devices.",
        next: &[PatternLink {
            to: "Initialization",
            note: "classical data enters the quantum part through state preparation",
        }],
    },
];
