import init, { unitCircle, partialSums, convergence, maxN } from "./pkg/primechi_wasm.js";

const COLORS = { one: "#444", prime: "#c0392b", composite: "#2c7fb8", total: "#222" };

function $(id) {
  return document.getElementById(id);
}

function report(id, text, isError = false) {
  const el = $(id);
  el.textContent = text;
  el.className = isError ? "err" : "note";
}

// maps a box [x0, x1] x [y0, y1] onto the canvas with equal scaling on both axes
function planeView(canvas, x0, x1, y0, y1, pad = 24) {
  const scale = Math.min((canvas.width - 2 * pad) / (x1 - x0), (canvas.height - 2 * pad) / (y1 - y0));
  const cx = canvas.width / 2 - scale * (x0 + x1) / 2;
  const cy = canvas.height / 2 + scale * (y0 + y1) / 2;
  return { px: (x) => cx + scale * x, py: (y) => cy - scale * y };
}

function axes(ctx, view, canvas) {
  ctx.strokeStyle = "#ddd";
  ctx.lineWidth = 1;
  ctx.beginPath();
  ctx.moveTo(0, view.py(0));
  ctx.lineTo(canvas.width, view.py(0));
  ctx.moveTo(view.px(0), 0);
  ctx.lineTo(view.px(0), canvas.height);
  ctx.stroke();
}

function drawCircle() {
  const canvas = $("circle");
  const ctx = canvas.getContext("2d");
  const limit = Number($("circle-limit").value);
  let data;
  try {
    data = unitCircle(limit);
  } catch (e) {
    report("circle-msg", String(e.message ?? e), true);
    return;
  }
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const view = planeView(canvas, -1.1, 1.1, -1.1, 1.1);
  axes(ctx, view, canvas);
  ctx.strokeStyle = "#bbb";
  ctx.beginPath();
  ctx.arc(view.px(0), view.py(0), view.px(1) - view.px(0), 0, 2 * Math.PI);
  ctx.stroke();
  let primes = 0;
  for (let i = 0; i < data.length; i += 3) {
    const kind = data[i + 2];
    if (kind === 1) primes++;
    ctx.fillStyle = kind === 0 ? COLORS.one : kind === 1 ? COLORS.prime : COLORS.composite;
    ctx.beginPath();
    ctx.arc(view.px(data[i]), view.py(data[i + 1]), kind === 1 ? 2.5 : 1.5, 0, 2 * Math.PI);
    ctx.fill();
  }
  report("circle-msg", `${limit} values, ${primes} primes`);
}

function drawWalk() {
  const canvas = $("walk");
  const ctx = canvas.getContext("2d");
  const sigma = Number($("walk-sigma").value);
  const t = Number($("walk-t").value);
  const depth = Number($("walk-depth").value);
  let data;
  try {
    data = partialSums(sigma, t, depth);
  } catch (e) {
    report("walk-msg", String(e.message ?? e), true);
    return;
  }
  let [x0, x1, y0, y1] = [-1.5, 1.5, -1, 1];
  for (let i = 0; i < data.length; i += 2) {
    x0 = Math.min(x0, data[i]);
    x1 = Math.max(x1, data[i]);
    y0 = Math.min(y0, data[i + 1]);
    y1 = Math.max(y1, data[i + 1]);
  }
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const view = planeView(canvas, x0, x1, y0, y1);
  axes(ctx, view, canvas);
  const paths = [
    [0, COLORS.total],
    [2, COLORS.prime],
    [4, COLORS.composite],
  ];
  for (const [offset, color] of paths) {
    ctx.strokeStyle = color;
    ctx.lineWidth = 1.2;
    ctx.beginPath();
    for (let i = 0; i < data.length; i += 6) {
      const x = view.px(data[i + offset]);
      const y = view.py(data[i + offset + 1]);
      i === 0 ? ctx.moveTo(x, y) : ctx.lineTo(x, y);
    }
    ctx.stroke();
  }
  // reference marks at −1, 0 and 1
  ctx.fillStyle = "#000";
  for (const x of [-1, 0, 1]) {
    ctx.fillRect(view.px(x) - 3, view.py(0) - 3, 6, 6);
  }
  const last = data.length - 6;
  const fmt = (re, im) => `${re.toFixed(6)}${im < 0 ? "−" : "+"}${Math.abs(im).toFixed(6)}i`;
  report(
    "walk-msg",
    `N = ${depth}: L = ${fmt(data[last], data[last + 1])}, ω = ${fmt(data[last + 2], data[last + 3])}, ` +
      `λ = ${fmt(data[last + 4], data[last + 5])}`
  );
}

function drawConvergence() {
  const canvas = $("conv");
  const ctx = canvas.getContext("2d");
  const x = Number($("conv-x").value);
  const depth = Number($("conv-depth").value);
  let data;
  try {
    data = convergence(x, depth);
  } catch (e) {
    report("conv-msg", String(e.message ?? e), true);
    return;
  }
  const rows = [];
  for (let i = 0; i < data.length; i += 4) rows.push(Array.from(data.subarray(i, i + 4)));
  const positive = rows.flatMap((r) => r.slice(1)).filter((v) => v > 0 && Number.isFinite(v));
  const lo = Math.floor(Math.log10(Math.min(...positive)));
  const hi = Math.ceil(Math.log10(Math.max(...positive)));
  const kMax = Math.log10(Math.max(depth, 10));
  const pad = 40;
  const px = (k) => pad + ((canvas.width - 2 * pad) * Math.log10(k)) / kMax;
  const py = (v) => canvas.height - pad - ((canvas.height - 2 * pad) * (Math.log10(v) - lo)) / (hi - lo || 1);
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  ctx.fillStyle = "#555";
  ctx.strokeStyle = "#eee";
  ctx.font = "11px system-ui";
  for (let e = lo; e <= hi; e++) {
    ctx.beginPath();
    ctx.moveTo(pad, py(10 ** e));
    ctx.lineTo(canvas.width - pad, py(10 ** e));
    ctx.stroke();
    ctx.fillText(`1e${e}`, 2, py(10 ** e) + 4);
  }
  for (let e = 0; e <= Math.floor(kMax); e++) ctx.fillText(`K=1e${e}`, px(10 ** e) - 12, canvas.height - 12);
  const series = [
    [1, COLORS.total, []],
    [2, COLORS.prime, []],
    [3, COLORS.composite, [5, 4]],
  ];
  for (const [col, color, dash] of series) {
    ctx.strokeStyle = color;
    ctx.setLineDash(dash);
    ctx.beginPath();
    let started = false;
    for (const r of rows) {
      if (!(r[col] > 0) || !Number.isFinite(r[col])) {
        started = false;
        continue;
      }
      started ? ctx.lineTo(px(r[0]), py(r[col])) : ctx.moveTo(px(r[0]), py(r[col]));
      started = true;
    }
    ctx.stroke();
  }
  ctx.setLineDash([]);
  const last = rows[rows.length - 1];
  report(
    "conv-msg",
    `K = ${last[0]}: Basel gap ${last[1].toExponential(3)}, product error ${last[2].toExponential(3)}` +
      (Number.isFinite(last[3]) ? `, bound ${last[3].toExponential(3)}` : "")
  );
}

function bind(formId, draw) {
  $(formId).addEventListener("submit", (ev) => {
    ev.preventDefault();
    draw();
  });
}

await init();
for (const id of ["circle-limit", "walk-depth", "conv-depth"]) $(id).max = maxN();
bind("circle-form", drawCircle);
bind("walk-form", drawWalk);
bind("conv-form", drawConvergence);
drawCircle();
drawWalk();
drawConvergence();
