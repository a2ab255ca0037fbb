int state(int s)
{
    switch (s) {
    case 0:
    again:
        s++;
    case 1:
        if (s < 3)
            goto again;
        break;
    default:
        while (s > 0)
            s--;
    }
    return s;
}
