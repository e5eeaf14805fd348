//! The tensor node and the reverse-mode traversal.

use std::cell::{Cell, RefCell};
use std::rc::Rc;

use super::AutodiffError;

thread_local! {
    static NEXT_ID: Cell<u64> = const { Cell::new(0) };
}

fn next_id() -> u64 {
    NEXT_ID.with(|c| {
        let id = c.get();
        c.set(id + 1);
        id
    })
}

/// The backward rule of one op: reads the node's gradient and accumulates
/// into its parents' gradients.
pub(crate) type BackwardFn = Box<dyn Fn(&Tensor)>;

pub(crate) struct TensorData {
    pub(crate) id: u64,
    pub(crate) shape: Vec<usize>,
    pub(crate) values: RefCell<Vec<f64>>,
    pub(crate) grad: RefCell<Option<Vec<f64>>>,
    /// Set on leaves the caller wants gradients for; interior nodes receive
    /// gradients whenever anything upstream needs them.
    pub(crate) requires_grad: bool,
    pub(crate) parents: Vec<Tensor>,
    pub(crate) backward_fn: Option<BackwardFn>,
}

/// An n-dimensional array node in a computation graph. Cheap to clone
/// (reference counted).
#[derive(Clone)]
pub struct Tensor {
    pub(crate) data: Rc<TensorData>,
}

impl std::fmt::Debug for Tensor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Tensor")
            .field("id", &self.data.id)
            .field("shape", &self.data.shape)
            .field("requires_grad", &self.data.requires_grad)
            .finish()
    }
}

impl Tensor {
    /// A leaf tensor.
    pub fn new(values: Vec<f64>, shape: &[usize], requires_grad: bool) -> Tensor {
        assert_eq!(
            values.len(),
            shape.iter().product::<usize>(),
            "value count must match shape"
        );
        Tensor {
            data: Rc::new(TensorData {
                id: next_id(),
                shape: shape.to_vec(),
                values: RefCell::new(values),
                grad: RefCell::new(None),
                requires_grad,
                parents: Vec::new(),
                backward_fn: None,
            }),
        }
    }

    pub fn zeros(shape: &[usize], requires_grad: bool) -> Tensor {
        Tensor::new(vec![0.0; shape.iter().product()], shape, requires_grad)
    }

    pub fn scalar(v: f64) -> Tensor {
        Tensor::new(vec![v], &[1], false)
    }

    /// An interior node produced by an op.
    pub(crate) fn from_op(
        values: Vec<f64>,
        shape: Vec<usize>,
        parents: Vec<Tensor>,
        backward_fn: BackwardFn,
    ) -> Tensor {
        debug_assert_eq!(values.len(), shape.iter().product::<usize>());
        Tensor {
            data: Rc::new(TensorData {
                id: next_id(),
                shape,
                values: RefCell::new(values),
                grad: RefCell::new(None),
                requires_grad: false,
                parents,
                backward_fn: Some(backward_fn),
            }),
        }
    }

    pub fn shape(&self) -> &[usize] {
        &self.data.shape
    }

    pub fn numel(&self) -> usize {
        self.data.shape.iter().product()
    }

    pub fn values(&self) -> std::cell::Ref<'_, Vec<f64>> {
        self.data.values.borrow()
    }

    /// Copies the values out.
    pub fn to_vec(&self) -> Vec<f64> {
        self.data.values.borrow().clone()
    }

    /// Overwrites the values in place (optimizer use).
    pub(crate) fn set_values(&self, new: &[f64]) {
        let mut v = self.data.values.borrow_mut();
        debug_assert_eq!(v.len(), new.len());
        v.copy_from_slice(new);
    }

    pub fn requires_grad(&self) -> bool {
        self.data.requires_grad
    }

    /// The accumulated gradient, if any backward pass reached this tensor.
    pub fn grad(&self) -> Option<Vec<f64>> {
        self.data.grad.borrow().clone()
    }

    pub fn zero_grad(&self) {
        *self.data.grad.borrow_mut() = None;
    }

    /// Adds `delta` into the gradient buffer.
    pub(crate) fn accumulate_grad(&self, delta: &[f64]) {
        let mut slot = self.data.grad.borrow_mut();
        match slot.as_mut() {
            Some(g) => {
                for (gi, di) in g.iter_mut().zip(delta) {
                    *gi += di;
                }
            }
            None => *slot = Some(delta.to_vec()),
        }
    }

    /// Whether a backward pass must propagate into this node.
    pub(crate) fn needs_grad(&self) -> bool {
        self.data.requires_grad || self.data.backward_fn.is_some()
    }

    /// A new leaf sharing this tensor's values but cut off from the graph.
    pub fn detach(&self) -> Tensor {
        Tensor::new(self.to_vec(), &self.data.shape, false)
    }

    /// Scalar value of a one-element tensor.
    pub fn item(&self) -> f64 {
        debug_assert_eq!(self.numel(), 1);
        self.data.values.borrow()[0]
    }
}

/// A named trainable tensor.
#[derive(Clone, Debug)]
pub struct Parameter {
    pub tensor: Tensor,
    pub name: String,
}

impl Parameter {
    pub fn new(name: impl Into<String>, values: Vec<f64>, shape: &[usize]) -> Parameter {
        Parameter {
            tensor: Tensor::new(values, shape, true),
            name: name.into(),
        }
    }
}

/// Populates gradients of every reachable tensor that needs one, by
/// reverse topological traversal from a scalar loss.
///
/// Gradients accumulate across calls until zeroed.
pub fn backward(loss: &Tensor) -> Result<(), AutodiffError> {
    if loss.numel() != 1 {
        return Err(AutodiffError::Graph(format!(
            "backward requires a scalar loss, got shape {:?}",
            loss.shape()
        )));
    }
    // Iterative post-order DFS over parent edges.
    let mut order: Vec<Tensor> = Vec::new();
    let mut visited = std::collections::HashSet::new();
    let mut stack: Vec<(Tensor, usize)> = vec![(loss.clone(), 0)];
    visited.insert(loss.data.id);
    while let Some((node, child_idx)) = stack.pop() {
        if child_idx < node.data.parents.len() {
            let parent = node.data.parents[child_idx].clone();
            stack.push((node, child_idx + 1));
            if parent.needs_grad() && visited.insert(parent.data.id) {
                stack.push((parent, 0));
            }
        } else {
            order.push(node);
        }
    }

    loss.accumulate_grad(&[1.0]);
    for node in order.iter().rev() {
        if let Some(bwd) = &node.data.backward_fn {
            if node.data.grad.borrow().is_some() {
                bwd(node);
            }
        }
    }
    // Interior gradients are scratch: drop them so only leaves keep state.
    for node in &order {
        if !node.data.requires_grad && node.data.backward_fn.is_some() {
            *node.data.grad.borrow_mut() = None;
        }
    }
    Ok(())
}
