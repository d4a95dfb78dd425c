// Small interaction primitives: trailing-edge debounce for slider drags and
// a per-panel single-flight guard so stale responses can never paint over
// newer ones.

export function debounce<A extends unknown[]>(
  ms: number,
  fn: (...args: A) => void,
): (...args: A) => void {
  let timer: ReturnType<typeof setTimeout> | undefined;
  return (...args: A) => {
    clearTimeout(timer);
    timer = setTimeout(() => fn(...args), ms);
  };
}

export class SingleFlight {
  private controller: AbortController | null = null;
  private ticket = 0;

  /** Abort any request still in flight and issue a new ticket. */
  begin(): { signal: AbortSignal; ticket: number } {
    this.controller?.abort();
    this.controller = new AbortController();
    this.ticket += 1;
    return { signal: this.controller.signal, ticket: this.ticket };
  }

  /** True while `ticket` is still the newest one issued. */
  isCurrent(ticket: number): boolean {
    return ticket === this.ticket;
  }
}

export function isAbort(error: unknown): boolean {
  return error instanceof DOMException && error.name === "AbortError";
}

/** Shortest friendly rendering of a float (trims binary noise for display). */
export function fmt(value: number): string {
  return String(Number(value.toPrecision(12)));
}
