/**
 * Schematic renderer: a tangle's twist vector as alternating boxes.
 *
 * The drawing follows the standard build order: the innermost (last)
 * entry is a horizontal twist box, orientation alternates outward, and
 * every box is labeled with its signed twist count. The zero tangle is
 * two flat strands, the infinite tangle (empty vector) two vertical
 * strands. Pure string-in/string-out so it can be tested without a DOM.
 */

const BOX = 64;
const GAP = 28;
const PAD = 24;

export type Orientation = "horizontal" | "vertical";

export interface TwistBox {
  count: number;
  orientation: Orientation;
}

/** Build-order box list (innermost twist first); null marks a payload the
 * schematic cannot draw. */
export function boxPlan(vector: unknown): TwistBox[] | null {
  if (!Array.isArray(vector) || vector.some((a) => typeof a !== "number" || !Number.isInteger(a))) {
    return null;
  }
  const terms = vector as number[];
  if (terms.length === 0 || (terms.length === 1 && terms[0] === 0)) {
    return []; // trivial tangles draw strands, not boxes
  }
  if (terms.length % 2 === 0 || terms.slice(1).some((a) => a === 0)) {
    return null; // not a standard-form vector
  }
  const plan: TwistBox[] = [];
  for (let position = terms.length; position >= 1; position--) {
    const count = terms[position - 1]!;
    if (count === 0) continue; // an outermost zero adds no box
    plan.push({ count, orientation: position % 2 === 1 ? "horizontal" : "vertical" });
  }
  return plan;
}

function signed(count: number): string {
  return count > 0 ? `+${count}` : `${count}`;
}

function strandPair(direction: "flat" | "upright"): string {
  const [a, b] =
    direction === "flat"
      ? [
          `M ${PAD} ${PAD} H ${PAD + BOX}`,
          `M ${PAD} ${PAD + BOX / 2} H ${PAD + BOX}`,
        ]
      : [
          `M ${PAD} ${PAD} V ${PAD + BOX}`,
          `M ${PAD + BOX / 2} ${PAD} V ${PAD + BOX}`,
        ];
  return (
    `<path data-strand="${direction}" d="${a}" fill="none" stroke="currentColor" stroke-width="3"/>` +
    `<path data-strand="${direction}" d="${b}" fill="none" stroke="currentColor" stroke-width="3"/>`
  );
}

function svgDocument(width: number, height: number, body: string): string {
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${width} ${height}" ` +
    `width="${width}" height="${height}" role="img">` +
    body +
    `</svg>`
  );
}

export function renderTangleSchematic(vector: unknown): string {
  const plan = boxPlan(vector);
  if (plan === null) {
    return svgDocument(
      2 * PAD + 4 * BOX,
      2 * PAD + BOX,
      `<text data-badge="unrepresentable" x="${PAD}" y="${PAD + BOX / 2}">unrepresentable</text>`
    );
  }
  if (plan.length === 0) {
    const upright = Array.isArray(vector) && (vector as number[]).length === 0;
    return svgDocument(2 * PAD + BOX, 2 * PAD + BOX, strandPair(upright ? "upright" : "flat"));
  }

  const parts: string[] = [];
  let x = PAD;
  const rowY: Record<Orientation, number> = { horizontal: PAD, vertical: PAD + BOX + GAP };
  let previousCenter: [number, number] | null = null;
  for (const box of plan) {
    const y = rowY[box.orientation];
    const w = box.orientation === "horizontal" ? BOX * 1.4 : BOX * 0.7;
    const h = box.orientation === "horizontal" ? BOX * 0.7 : BOX * 1.4;
    const center: [number, number] = [x + w / 2, y + h / 2];
    if (previousCenter) {
      parts.push(
        `<path data-strand="link" d="M ${previousCenter[0]} ${previousCenter[1]} L ${center[0]} ${center[1]}" ` +
          `fill="none" stroke="currentColor" stroke-width="2" opacity="0.45"/>`
      );
    }
    parts.push(
      `<g data-box="${box.orientation}" data-count="${signed(box.count)}" transform="translate(${x} ${y})">` +
        `<rect width="${w}" height="${h}" rx="8" fill="none" stroke="currentColor" stroke-width="2.5"/>` +
        `<text x="${w / 2}" y="${h / 2}" dominant-baseline="central" text-anchor="middle" ` +
        `font-size="20">${signed(box.count)}</text>` +
        `</g>`
    );
    previousCenter = center;
    x += w + GAP;
  }
  const width = x - GAP + PAD;
  const height = 2 * PAD + 2 * BOX + GAP + BOX * 0.4;
  return svgDocument(width, height, parts.join(""));
}
