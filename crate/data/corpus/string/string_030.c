int main()
{
    char buf[2000];
    int idx, n = 0, in_word = 0;
    fgets(buf, sizeof(buf), stdin);
    for (idx = 0; buf[idx] != '\0'; idx++) {
        if (buf[idx] == ' ' || buf[idx] == '\n' || buf[idx] == '\t')
            in_word = 0;
        else if (!in_word) {
            in_word = 1;
            n++;
        }
    }
    printf("%d\n", n);
    return 0;
}
