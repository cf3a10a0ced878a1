//! Instrumentation hooks for the minimization pipeline.

use crate::coeff::Coefficient;
use crate::lists::EncodedList;
use crate::words::Mode;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepKind {
    /// One `MainProcessingStep` at depth `depth`.
    MainStep,
    /// One generic transfer-and-prune move on a family with stem of
    /// length `depth - 2`.
    GenericMove,
    /// The special depth-2 move of the group case.
    SpecialMove,
}

/// A completed pipeline step. Sizes are total sizes except
/// `input_coeff_size`, the coefficient size of the step's input.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StepEvent {
    pub kind: StepKind,
    pub mode: Mode,
    pub rank: usize,
    pub depth: usize,
    pub input_total: u64,
    pub input_coeff_size: u64,
    pub output_total: u64,
    pub minimal: bool,
}

impl StepEvent {
    /// Checks the size guarantee that applies to this step, if any:
    /// contraction by 8/9 for monoid steps with `n ≥ 3` and for group steps
    /// at depth `≥ 3`, and `‖B‖ + 2n` for group steps at depth 2.
    pub fn within_bound(&self) -> bool {
        if self.minimal {
            return true;
        }
        let contraction = 9 * self.output_total <= 8 * self.input_total;
        match (self.mode, self.kind) {
            (Mode::Monoid, StepKind::MainStep | StepKind::GenericMove) => self.rank < 3 || contraction,
            (Mode::Group, StepKind::MainStep) if self.depth == 2 => {
                self.output_total <= self.input_coeff_size + 2 * self.rank as u64
            }
            (Mode::Group, StepKind::MainStep | StepKind::GenericMove) => contraction,
            (_, StepKind::SpecialMove) => self.output_total <= self.input_coeff_size + 2 * self.rank as u64,
        }
    }
}

/// Receives pipeline events. All methods default to doing nothing.
pub trait Observer<C: Coefficient> {
    /// Whether [`Observer::event`] should be called; building an event
    /// costs a pass over the step's input.
    fn wants_events(&self) -> bool {
        false
    }

    fn event(&mut self, _event: &StepEvent) {}

    /// Whether [`Observer::frame`] should be called; building frames
    /// costs a copy of the working list.
    fn wants_frames(&self) -> bool {
        false
    }

    /// The full working list at the start of an iteration.
    fn frame(&mut self, _label: &str, _list: &EncodedList<C>) {}
}

impl<C: Coefficient> Observer<C> for () {}

/// Records every event.
#[derive(Clone, Debug, Default)]
pub struct EventLog {
    pub events: Vec<StepEvent>,
}

impl EventLog {
    pub fn violations(&self) -> impl Iterator<Item = &StepEvent> {
        self.events.iter().filter(|e| !e.within_bound())
    }
}

impl<C: Coefficient> Observer<C> for EventLog {
    fn wants_events(&self) -> bool {
        true
    }

    fn event(&mut self, event: &StepEvent) {
        self.events.push(*event);
    }
}

/// Records the working list before each iteration.
#[derive(Clone)]
pub struct FrameLog<C> {
    pub frames: Vec<(String, EncodedList<C>)>,
    pub events: Vec<StepEvent>,
}

impl<C> Default for FrameLog<C> {
    fn default() -> Self {
        FrameLog { frames: Vec::new(), events: Vec::new() }
    }
}

impl<C: Coefficient> Observer<C> for FrameLog<C> {
    fn wants_events(&self) -> bool {
        true
    }

    fn event(&mut self, event: &StepEvent) {
        self.events.push(*event);
    }

    fn wants_frames(&self) -> bool {
        true
    }

    fn frame(&mut self, label: &str, list: &EncodedList<C>) {
        self.frames.push((label.to_string(), list.clone()));
    }
}
