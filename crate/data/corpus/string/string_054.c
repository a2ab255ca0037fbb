// count words in a line
int main()
{
    char buf[2000];
    int i, words = 0, in_word = 0;
    fgets(buf, sizeof(buf), stdin);
    for (i = 0; buf[i] != '\0'; i++) {
        if (buf[i] == ' ' || buf[i] == '\n' || buf[i] == '\t')
            in_word = 0;
        else if (!in_word) {
            in_word = 1;
            words++;
        }
    }
    printf("%d\n", words);
    return 0;
}
