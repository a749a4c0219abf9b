/** Canvas rendering of draw ops and gesture handling for token placement. */

import { DrawOp } from "./scene";

export class CanvasView {
  ctx: CanvasRenderingContext2D;

  constructor(
    public canvas: HTMLCanvasElement,
    public extent: number,
  ) {
    const ctx = canvas.getContext("2d");
    if (!ctx) throw new Error("canvas 2d context unavailable");
    this.ctx = ctx;
  }

  get scale(): number {
    return this.canvas.width / this.extent;
  }

  /** view-frame meters (origin at scene center, +y up) -> canvas px */
  toCanvas(x: number, y: number): [number, number] {
    return [(x + this.extent / 2) * this.scale,
            (this.extent / 2 - y) * this.scale];
  }

  toWorld(px: number, py: number): [number, number] {
    return [px / this.scale - this.extent / 2,
            this.extent / 2 - py / this.scale];
  }

  clear(color = "#14171c"): void {
    this.ctx.fillStyle = color;
    this.ctx.fillRect(0, 0, this.canvas.width, this.canvas.height);
  }

  render(ops: DrawOp[]): void {
    const ctx = this.ctx;
    for (const op of ops) {
      if (op.kind === "polygon") {
        ctx.fillStyle = op.fill;
        ctx.beginPath();
        op.points.forEach(([x, y], i) => {
          const [px, py] = this.toCanvas(x, y);
          i === 0 ? ctx.moveTo(px, py) : ctx.lineTo(px, py);
        });
        ctx.closePath();
        ctx.fill();
      } else if (op.kind === "polyline") {
        ctx.strokeStyle = op.stroke;
        ctx.lineWidth = op.width * this.scale;
        ctx.beginPath();
        op.points.forEach(([x, y], i) => {
          const [px, py] = this.toCanvas(x, y);
          i === 0 ? ctx.moveTo(px, py) : ctx.lineTo(px, py);
        });
        ctx.stroke();
      } else if (op.kind === "segment") {
        ctx.strokeStyle = op.stroke;
        ctx.lineWidth = op.width * this.scale;
        ctx.beginPath();
        const [x0, y0] = this.toCanvas(op.x0, op.y0);
        const [x1, y1] = this.toCanvas(op.x1, op.y1);
        ctx.moveTo(x0, y0);
        ctx.lineTo(x1, y1);
        ctx.stroke();
      } else {
        this.drawBox(op.cx, op.cy, op.heading, op.length, op.width,
                     op.fill, op.stroke, op.lineWidth);
      }
    }
  }

  drawBox(cx: number, cy: number, heading: number, length: number, width: number,
          fill: string, stroke: string, lineWidth: number): void {
    const ctx = this.ctx;
    const c = Math.cos(heading);
    const s = Math.sin(heading);
    const hl = length / 2;
    const hw = width / 2;
    const corners: [number, number][] = [
      [hl, hw], [-hl, hw], [-hl, -hw], [hl, -hw],
    ].map(([u, v]) => [cx + u * c - v * s, cy + u * s + v * c]);
    ctx.fillStyle = fill;
    ctx.strokeStyle = stroke;
    ctx.lineWidth = lineWidth * this.scale;
    ctx.beginPath();
    corners.forEach(([x, y], i) => {
      const [px, py] = this.toCanvas(x, y);
      i === 0 ? ctx.moveTo(px, py) : ctx.lineTo(px, py);
    });
    ctx.closePath();
    ctx.fill();
    ctx.stroke();
    // heading tick from center to the front edge
    const [p0x, p0y] = this.toCanvas(cx, cy);
    const [p1x, p1y] = this.toCanvas(cx + hl * c, cy + hl * s);
    ctx.beginPath();
    ctx.moveTo(p0x, p0y);
    ctx.lineTo(p1x, p1y);
    ctx.stroke();
  }
}

export interface Gesture {
  x: number;
  y: number;
  heading: number;
  dragged: boolean;
}

/** Click sets the position; dragging sets the heading. */
export function attachTokenGestures(
  view: CanvasView,
  onPlace: (g: Gesture) => void,
  onPreview?: (g: Gesture | null) => void,
): void {
  let down: [number, number] | null = null;

  view.canvas.addEventListener("pointerdown", (ev) => {
    const rect = view.canvas.getBoundingClientRect();
    down = view.toWorld(ev.clientX - rect.left, ev.clientY - rect.top);
  });

  const gesture = (ev: PointerEvent): Gesture | null => {
    if (!down) return null;
    const rect = view.canvas.getBoundingClientRect();
    const [x, y] = view.toWorld(ev.clientX - rect.left, ev.clientY - rect.top);
    const dx = x - down[0];
    const dy = y - down[1];
    const dragged = Math.hypot(dx, dy) > 1.0;
    return { x: down[0], y: down[1],
             heading: dragged ? Math.atan2(dy, dx) : 0, dragged };
  };

  view.canvas.addEventListener("pointermove", (ev) => {
    if (onPreview) onPreview(gesture(ev));
  });
  view.canvas.addEventListener("pointerup", (ev) => {
    const g = gesture(ev);
    down = null;
    if (onPreview) onPreview(null);
    if (g) onPlace(g);
  });
}
